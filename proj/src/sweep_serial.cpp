#include <set>

#include "tvindex/errors.hpp"
#include "tvindex/sweep.hpp"

namespace tvi {

namespace {

// Advances v through [-bound, bound]^dim in lexicographic order; false at the end.
bool next_in_box(std::vector<Integer>& v, Integer bound) {
  for (std::size_t p = v.size(); p-- > 0;) {
    if (v[p] < bound) {
      ++v[p];
      return true;
    }
    v[p] = -bound;
  }
  return false;
}

}  // namespace

std::vector<WeightVector> box_vectors(int m, Integer bound, bool include_zero) {
  std::vector<WeightVector> out;
  if (bound < 0) return out;
  WeightVector b(static_cast<std::size_t>(m), -bound);
  do {
    if (include_zero || !is_zero(b)) out.push_back(b);
  } while (next_in_box(b, bound));
  return out;
}

std::vector<WeightVector> admissible_vectors(const PreparedSetup& setup, Integer bound) {
  std::set<WeightVector> found;
  const auto m = static_cast<std::size_t>(setup.setup().m);
  for (const auto& counter : setup.points()) {
    const auto& solver = counter.solver();
    const int eta = counter.datum().group_sign;
    auto accept = [&](const std::vector<Integer>& target) {
      WeightVector b(m);
      for (std::size_t p = 0; p < m; ++p) {
        b[p] = -eta * target[p];
        if (std::abs(b[p]) > bound) return;
      }
      if (!is_zero(b)) found.insert(std::move(b));
    };

    if (solver.full_rank()) {
      // b is pinned by its pivot coordinates, so a box over those suffices.
      std::vector<Integer> pivot_values(solver.rank(), -bound);
      std::vector<Integer> target;
      do {
        if (solver.complete_from_pivots(pivot_values, target)) accept(target);
      } while (next_in_box(pivot_values, bound));
    } else {
      for (const auto& b : box_vectors(static_cast<int>(m), bound)) {
        WeightVector target(m);
        for (std::size_t p = 0; p < m; ++p) target[p] = -eta * b[p];
        if (solver.count(target) > 0) found.insert(b);
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<SweepFailure> nonzero_entries(std::span<const WeightVector> bs, std::span<const Integer> values) {
  std::vector<SweepFailure> out;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (values[i] != 0) out.push_back({bs[i], values[i]});
  }
  return out;
}

namespace serial {

std::vector<Integer> index_values(const PreparedSetup& setup, std::span<const WeightVector> bs) {
  std::vector<Integer> out;
  out.reserve(bs.size());
  for (const auto& b : bs) out.push_back(setup.index_value(b));
  return out;
}

std::vector<Integer> signature_sums(const PreparedSetup& setup, std::span<const WeightVector> bs) {
  std::vector<Integer> out;
  out.reserve(bs.size());
  for (const auto& b : bs) out.push_back(setup.signature_sum_value(b));
  return out;
}

}  // namespace serial

}  // namespace tvi
