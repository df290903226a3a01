#include "tvindex/index.hpp"

#include "tvindex/errors.hpp"

namespace tvi {

int form_grading(std::span<const int> i, OperatorKind kind, int orientation_sign) {
  int sign = 1;
  switch (kind) {
    case OperatorKind::de_rham:
      for (int iq : i) {
        if (iq == 3 || iq == 4) sign = -sign;
      }
      return sign;
    case OperatorKind::signature:
      for (int iq : i) {
        if (iq % 2 == 0) sign = -sign;
      }
      return orientation_sign * sign;
    case OperatorKind::generic:
      break;
  }
  throw WrongOperatorKind("form gradings exist only for the de Rham and signature operators");
}

std::vector<FormLine> form_lines(std::span<const WeightVector> weights, OperatorKind kind, int orientation_sign,
                                 FormBasis basis) {
  const std::size_t n = weights.size();
  const std::size_t m = n == 0 ? 0 : weights.front().size();
  const std::vector<int> letters = basis == FormBasis::even ? std::vector<int>{2, 4} : std::vector<int>{1, 2, 3, 4};
  const std::size_t radix = letters.size();

  std::size_t total = 1;
  for (std::size_t q = 0; q < n; ++q) total *= radix;

  std::vector<FormLine> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    FormLine line;
    line.a.assign(m, 0);
    std::size_t rest = code;
    // First plane varies slowest, so (2,2), (2,4), (4,2), (4,4).
    line.i.assign(n, 0);
    for (std::size_t q = n; q-- > 0;) {
      line.i[q] = letters[rest % radix];
      rest /= radix;
    }
    for (std::size_t q = 0; q < n; ++q) {
      const int iq = line.i[q];
      line.epsilon.push_back(iq % 2 == 0 ? -1 : 1);
      if (iq == 3) line.a = line.a - weights[q];
      if (iq == 4) line.a = line.a + weights[q];
    }
    line.grading = form_grading(line.i, kind, orientation_sign);
    out.push_back(std::move(line));
  }
  return out;
}

FixedPointDatum build_form_datum(std::string name, std::vector<WeightVector> weights, OperatorKind kind,
                                 int orientation_sign, FormBasis basis) {
  FixedPointDatum datum;
  datum.name = std::move(name);
  for (auto& line : form_lines(weights, kind, orientation_sign, basis)) {
    datum.lines.push_back({std::move(line.a), line.grading, std::move(line.epsilon)});
  }
  datum.tangent_weights = std::move(weights);
  datum.base_orientation = orientation_sign;
  datum.orientation_sign = orientation_sign;
  return datum;
}

Integer s_of_A(const FixedPointDatum& datum, Subset subset, OperatorKind kind) {
  const std::size_t n = datum.dimension();
  Integer total = 0;
  std::vector<int> i(n);
  // Walk I_A: i_h in {2,4} for h in A, i_h = 2 otherwise.
  for (Subset pick = 0; pick < (Subset{1} << n); ++pick) {
    if ((pick & ~subset) != 0) continue;
    for (std::size_t h = 0; h < n; ++h) i[h] = (pick >> h) & 1U ? 4 : 2;
    total += form_grading(i, kind, datum.orientation_sign);
  }
  return total;
}

// ---------------------------------------------------------------------------

PreparedSetup::PreparedSetup(const OperatorSetup& setup) : setup_(normalize_setup(setup)) {
  const ScaledTau tau = scale(setup_.tau);
  points_.reserve(setup_.points.size());
  for (const auto& pt : setup_.points) points_.emplace_back(pt, tau);
}

void PreparedSetup::check_b(const WeightVector& b) const {
  if (b.size() != static_cast<std::size_t>(setup_.m)) {
    throw RankMismatch("b has length " + std::to_string(b.size()) + ", torus rank is " + std::to_string(setup_.m));
  }
}

Integer PreparedSetup::point_index(std::size_t point, const WeightVector& b) const {
  const auto& counter = points_[point];
  Integer value = 0;
  for (std::size_t j = 0; j < counter.datum().lines.size(); ++j) {
    value += counter.datum().lines[j].grading * counter.kernel_count(j, b);
  }
  return value;
}

IndexResult PreparedSetup::index(const WeightVector& b) const {
  check_b(b);
  IndexResult result;
  for (std::size_t x = 0; x < points_.size(); ++x) {
    const Integer v = point_index(x, b);
    result.per_point.push_back({points_[x].datum().name, v});
    result.value += v;
  }
  return result;
}

Integer PreparedSetup::index_value(const WeightVector& b) const {
  check_b(b);
  Integer value = 0;
  for (std::size_t x = 0; x < points_.size(); ++x) value += point_index(x, b);
  return value;
}

SignatureSum PreparedSetup::signature_sum(const WeightVector& b) const {
  check_b(b);
  SignatureSum out;
  for (const auto& counter : points_) {
    PointSignatureTerms pt;
    pt.point = counter.datum().name;
    pt.orientation_sign = counter.datum().orientation_sign;
    Integer inner = 0;
    for (const auto& t : counter.restricted_terms(b)) {
      SubsetTerm term;
      for (std::size_t h = 0; h < counter.datum().dimension(); ++h) {
        if ((t.subset >> h) & 1U) term.subset.push_back(static_cast<int>(h + 1));
      }
      term.weight = Integer{1} << subset_size(t.subset);
      term.count = t.count;
      inner += term.weight * term.count;
      pt.terms.push_back(std::move(term));
    }
    pt.value = pt.orientation_sign * inner;
    out.value += pt.value;
    out.per_point.push_back(std::move(pt));
  }
  return out;
}

Integer PreparedSetup::signature_sum_value(const WeightVector& b) const {
  check_b(b);
  Integer value = 0;
  for (const auto& counter : points_) {
    value += counter.datum().orientation_sign * counter.weighted_restricted_sum(b);
  }
  return value;
}

// ---------------------------------------------------------------------------

IndexResult transverse_index(const OperatorSetup& setup, const WeightVector& b) {
  return PreparedSetup(setup).index(b);
}

namespace {

void require_kind(const OperatorSetup& setup, OperatorKind kind, const char* what) {
  if (setup.kind != kind) {
    throw WrongOperatorKind(std::string(what) + " needs a " + to_string(kind) + " setup, got " +
                            to_string(setup.kind));
  }
}

}  // namespace

Integer euler_characteristic(const OperatorSetup& setup) {
  require_kind(setup, OperatorKind::de_rham, "euler_characteristic");
  const auto points = static_cast<Integer>(setup.points.size());
  const Integer index = transverse_index(setup, WeightVector(setup.m, 0)).value;
  if (index != points) {
    throw Error("Euler characteristic mismatch: " + std::to_string(points) + " fixed points but invariant index " +
                std::to_string(index));
  }
  return points;
}

Integer signature(const OperatorSetup& setup) {
  require_kind(setup, OperatorKind::signature, "signature");
  const OperatorSetup normalized = normalize_setup(setup);
  Integer total = 0;
  for (const auto& pt : normalized.points) {
    total += (pt.dimension() % 2 == 0 ? 1 : -1) * pt.orientation_sign;
  }
  return total;
}

Integer b_euler(const OperatorSetup& setup, const WeightVector& b) {
  require_kind(setup, OperatorKind::de_rham, "b_euler");
  if (is_zero(b)) throw ZeroB("b_euler needs b != 0");
  return transverse_index(setup, b).value;
}

SignatureSum b_signature_sum(const OperatorSetup& setup, const WeightVector& b) {
  return PreparedSetup(setup).signature_sum(b);
}

Integer verify_killing_identity(const OperatorSetup& setup, const WeightVector& b) {
  return PreparedSetup(setup).signature_sum_value(b);
}

}  // namespace tvi
