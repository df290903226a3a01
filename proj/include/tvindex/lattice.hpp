#pragma once

// Nonnegative lattice solutions of sum_h c_h k_h = t, where every weight has
// k_h.tau > 0. That positivity makes the solution set finite: each c_h is at
// most (t.tau) / (k_h.tau).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "tvindex/model.hpp"

namespace tvi {

struct LatticeSolution {
  std::vector<Integer> m;

  auto operator<=>(const LatticeSolution&) const = default;
};

/// Bit h set <=> tangent plane h (0-based) belongs to the subset.
using Subset = std::uint32_t;

inline int subset_size(Subset a) { return __builtin_popcount(a); }

/// Prepared solver for one family of weight vectors.
///
/// Columns are split into a maximal linearly independent suffix and a
/// dependent prefix. The prefix is enumerated by depth-first search, pruned
/// by the scalar constraint sum c_h kappa_h = t.tau; the suffix is recovered
/// by one exact back-solve, so independent families never branch.
class ConeSolver {
 public:
  ConeSolver() = default;
  ConeSolver(std::span<const WeightVector> weights, const ScaledTau& tau);

  std::size_t size() const { return n_; }
  std::size_t rank() const { return rank_; }
  bool full_rank() const { return rank_ == n_; }

  Integer count(std::span<const Integer> target) const {
    Integer total = 0;
    auto tally = [&](std::span<const Integer>) { ++total; };
    search<false>(target, tally);
    return total;
  }

  /// Full-rank solvers only: given the target's values on pivot_rows(),
  /// recovers the unique c, and if it is integral and nonnegative writes the
  /// whole target sum c_h k_h into `target`.
  bool complete_from_pivots(std::span<const Integer> pivot_values, std::vector<Integer>& target) const;
  const std::vector<std::size_t>& pivot_rows() const { return pivots_; }

  /// Calls visit(c) for every solution, c in the caller's column order.
  template <class Visit>
  void for_each(std::span<const Integer> target, Visit&& visit) const {
    search<true>(target, visit);
  }

 private:
  template <bool Map, class Visit>
  void search(std::span<const Integer> target, Visit& visit) const;

  template <bool Map, class Visit>
  void descend(std::size_t depth, Integer* rest, Integer* c, Integer* mapped, Visit& visit) const;

  static constexpr std::size_t kScratch = 64;

  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t rank_ = 0;
  std::size_t free_ = 0;                  // number of branched columns
  std::vector<std::size_t> order_;        // position -> caller column
  std::vector<WeightVector> cols_;        // reordered columns
  std::vector<Integer> kappa_;            // reordered scaled k.tau
  std::vector<Integer> tau_;
  std::vector<std::size_t> pivots_;       // rows of the nonsingular rank x rank block
  std::vector<Integer> inverse_;          // den * block^{-1}, row-major
  Integer den_ = 1;
};

struct RestrictedTerm {
  Subset subset = 0;
  Integer count = 0;  // N(subset, b), nonzero
};

/// Counting engine for one normalized fixed point.
class PointCounter {
 public:
  PointCounter(FixedPointDatum datum, const ScaledTau& tau);

  const FixedPointDatum& datum() const { return datum_; }
  const ScaledTau& tau() const { return tau_; }
  const ConeSolver& solver() const { return solver_; }

  /// #{m <= 0 : sum m_h k_h = a_j + eta b}, or 0 unless every epsilon_jh = -1.
  Integer kernel_count(std::size_t line, const WeightVector& b) const;
  std::vector<LatticeSolution> kernel_solutions(std::size_t line, const WeightVector& b) const;

  /// N(A, b): #{(c_h)_{h in A}, c_h >= 1 : eta b = -sum_{h in A} c_h k_h}.
  Integer restricted_count(Subset subset, const WeightVector& b) const;

  /// Every subset A with N(A, b) != 0, in increasing mask order.
  std::vector<RestrictedTerm> restricted_terms(const WeightVector& b) const;

  /// sum over A of 2^|A| N(A, b).
  Integer weighted_restricted_sum(const WeightVector& b) const;

 private:
  WeightVector kernel_target(std::size_t line, const WeightVector& b) const;
  bool epsilon_gate(std::size_t line) const;

  FixedPointDatum datum_;
  ScaledTau tau_;
  ConeSolver solver_;
};

Integer kernel_count(const FixedPointDatum& datum, std::size_t line, const WeightVector& b,
                     const SlopeVector& tau);

/// Solutions in lexicographic order of m.
std::vector<LatticeSolution> enumerate_kernel_solutions(const FixedPointDatum& datum, std::size_t line,
                                                        const WeightVector& b, const SlopeVector& tau);

Integer restricted_count(const FixedPointDatum& datum, Subset subset, const WeightVector& b,
                         const SlopeVector& tau);

// ---------------------------------------------------------------------------

template <bool Map, class Visit>
void ConeSolver::search(std::span<const Integer> target, Visit& visit) const {
  // Scratch for rest | c | mapped; sweeps call this millions of times.
  const std::size_t need = m_ + 2 * n_;
  Integer local[kScratch];
  std::vector<Integer> heap;
  Integer* buf = local;
  if (need > kScratch) {
    heap.resize(need);
    buf = heap.data();
  }
  std::copy(target.begin(), target.end(), buf);
  std::fill(buf + m_, buf + need, Integer{0});
  descend<Map>(0, buf, buf + m_, buf + m_ + n_, visit);
}

template <bool Map, class Visit>
void ConeSolver::descend(std::size_t depth, Integer* rest, Integer* c, Integer* mapped, Visit& visit) const {
  Integer budget = 0;
  for (std::size_t p = 0; p < m_; ++p) budget += rest[p] * tau_[p];
  if (budget < 0) return;

  if (depth < free_) {
    const auto& k = cols_[depth];
    const Integer top = budget / kappa_[depth];
    for (Integer v = 0; v <= top; ++v) {
      c[depth] = v;
      descend<Map>(depth + 1, rest, c, mapped, visit);
      for (std::size_t p = 0; p < m_; ++p) rest[p] -= k[p];
    }
    for (std::size_t p = 0; p < m_; ++p) rest[p] += (top + 1) * k[p];
    c[depth] = 0;
    return;
  }

  for (std::size_t i = 0; i < rank_; ++i) {
    Integer num = 0;
    for (std::size_t j = 0; j < rank_; ++j) num += inverse_[i * rank_ + j] * rest[pivots_[j]];
    if (num % den_ != 0) return;
    const Integer ci = num / den_;
    if (ci < 0) return;
    c[free_ + i] = ci;
  }
  for (std::size_t p = 0; p < m_; ++p) {
    Integer s = 0;
    for (std::size_t i = 0; i < rank_; ++i) s += c[free_ + i] * cols_[free_ + i][p];
    if (s != rest[p]) return;
  }
  if constexpr (Map) {
    for (std::size_t i = 0; i < n_; ++i) mapped[order_[i]] = c[i];
    visit(std::span<const Integer>(mapped, n_));
  } else {
    visit(std::span<const Integer>(c, n_));
  }
}

}  // namespace tvi
