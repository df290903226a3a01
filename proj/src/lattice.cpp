#include "tvindex/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "tvindex/errors.hpp"

namespace tvi {

namespace {

constexpr std::size_t kTargetScratch = 32;

using Column = std::vector<Rational>;

// Rank of a family of columns by fraction-exact elimination.
std::size_t column_rank(std::vector<Column> cols) {
  if (cols.empty()) return 0;
  const std::size_t rows = cols.front().size();
  std::size_t rank = 0;
  std::vector<bool> used(rows, false);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::size_t pivot = rows;
    for (std::size_t p = 0; p < rows; ++p) {
      if (!used[p] && cols[j][p] != 0) {
        pivot = p;
        break;
      }
    }
    if (pivot == rows) continue;
    used[pivot] = true;
    ++rank;
    for (std::size_t q = j + 1; q < cols.size(); ++q) {
      const Rational f = cols[q][pivot] / cols[j][pivot];
      if (f == 0) continue;
      for (std::size_t p = 0; p < rows; ++p) cols[q][p] -= f * cols[j][p];
    }
  }
  return rank;
}

Column to_column(const WeightVector& w) { return Column(w.begin(), w.end()); }

}  // namespace

ConeSolver::ConeSolver(std::span<const WeightVector> weights, const ScaledTau& tau)
    : n_(weights.size()), m_(tau.values.size()), tau_(tau.values) {
  std::vector<std::size_t> by_kappa(n_);
  std::iota(by_kappa.begin(), by_kappa.end(), 0);
  std::vector<Integer> kap(n_);
  for (std::size_t h = 0; h < n_; ++h) {
    if (weights[h].size() != m_) throw RankMismatch("weight vector length differs from tau");
    kap[h] = tau.dot(weights[h]);
    if (kap[h] <= 0) throw NotNormalized("weight with k.tau <= 0 passed to lattice solver");
  }
  // Small kappa columns go to the solved block; they would branch the most.
  std::stable_sort(by_kappa.begin(), by_kappa.end(), [&](auto x, auto y) { return kap[x] < kap[y]; });

  std::vector<std::size_t> independent, dependent;
  std::vector<Column> basis;
  for (auto h : by_kappa) {
    basis.push_back(to_column(weights[h]));
    if (column_rank(basis) == basis.size()) {
      independent.push_back(h);
    } else {
      basis.pop_back();
      dependent.push_back(h);
    }
  }
  rank_ = independent.size();
  free_ = dependent.size();
  // Largest kappa first among branched columns keeps the search tree narrow at the top.
  std::reverse(dependent.begin(), dependent.end());
  order_ = dependent;
  order_.insert(order_.end(), independent.begin(), independent.end());
  for (auto h : order_) {
    cols_.push_back(weights[h]);
    kappa_.push_back(kap[h]);
  }

  if (rank_ == 0) return;

  // Pick rank_ rows on which the independent block is nonsingular.
  std::vector<Column> work;
  for (std::size_t i = 0; i < rank_; ++i) work.push_back(to_column(cols_[free_ + i]));
  std::vector<bool> used(m_, false);
  for (std::size_t j = 0; j < rank_; ++j) {
    std::size_t pivot = m_;
    for (std::size_t p = 0; p < m_; ++p) {
      if (!used[p] && work[j][p] != 0) {
        pivot = p;
        break;
      }
    }
    used[pivot] = true;
    pivots_.push_back(pivot);
    for (std::size_t q = j + 1; q < rank_; ++q) {
      const Rational f = work[q][pivot] / work[j][pivot];
      if (f == 0) continue;
      for (std::size_t p = 0; p < m_; ++p) work[q][p] -= f * work[j][p];
    }
  }

  // Gauss-Jordan inverse of block[i][j] = cols_[free_ + j][pivots_[i]].
  const std::size_t r = rank_;
  std::vector<Rational> a(r * r), inv(r * r, Rational(0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) a[i * r + j] = cols_[free_ + j][pivots_[i]];
    inv[i * r + i] = 1;
  }
  for (std::size_t col = 0; col < r; ++col) {
    std::size_t piv = col;
    while (a[piv * r + col] == 0) ++piv;
    if (piv != col) {
      for (std::size_t j = 0; j < r; ++j) {
        std::swap(a[piv * r + j], a[col * r + j]);
        std::swap(inv[piv * r + j], inv[col * r + j]);
      }
    }
    const Rational d = a[col * r + col];
    for (std::size_t j = 0; j < r; ++j) {
      a[col * r + j] /= d;
      inv[col * r + j] /= d;
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (i == col || a[i * r + col] == 0) continue;
      const Rational f = a[i * r + col];
      for (std::size_t j = 0; j < r; ++j) {
        a[i * r + j] -= f * a[col * r + j];
        inv[i * r + j] -= f * inv[col * r + j];
      }
    }
  }
  den_ = 1;
  for (const auto& x : inv) den_ = std::lcm(den_, x.denominator());
  inverse_.resize(r * r);
  for (std::size_t i = 0; i < r * r; ++i) inverse_[i] = inv[i].numerator() * (den_ / inv[i].denominator());
}

bool ConeSolver::complete_from_pivots(std::span<const Integer> pivot_values, std::vector<Integer>& target) const {
  std::vector<Integer> c(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    Integer num = 0;
    for (std::size_t j = 0; j < rank_; ++j) num += inverse_[i * rank_ + j] * pivot_values[j];
    if (num % den_ != 0) return false;
    c[i] = num / den_;
    if (c[i] < 0) return false;
  }
  target.assign(m_, 0);
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t p = 0; p < m_; ++p) target[p] += c[i] * cols_[free_ + i][p];
  }
  return true;
}

// ---------------------------------------------------------------------------

PointCounter::PointCounter(FixedPointDatum datum, const ScaledTau& tau)
    : datum_(std::move(datum)), tau_(tau) {
  require_normalized(datum_, tau_);
  solver_ = ConeSolver(datum_.tangent_weights, tau_);
}

bool PointCounter::epsilon_gate(std::size_t line) const {
  const auto& eps = datum_.lines.at(line).epsilon;
  return std::all_of(eps.begin(), eps.end(), [](int e) { return e == -1; });
}

WeightVector PointCounter::kernel_target(std::size_t line, const WeightVector& b) const {
  // m = -c with c >= 0:  sum c_h k_h = -(a_j + eta b).
  const auto& a = datum_.lines.at(line).a;
  if (b.size() != a.size()) throw RankMismatch("b has length " + std::to_string(b.size()));
  WeightVector t(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) t[p] = -(a[p] + datum_.group_sign * b[p]);
  return t;
}

Integer PointCounter::kernel_count(std::size_t line, const WeightVector& b) const {
  if (!epsilon_gate(line)) return 0;
  const auto& a = datum_.lines.at(line).a;
  if (b.size() != a.size()) throw RankMismatch("b has length " + std::to_string(b.size()));
  if (a.size() > kTargetScratch) return solver_.count(kernel_target(line, b));
  Integer t[kTargetScratch];
  for (std::size_t p = 0; p < a.size(); ++p) t[p] = -(a[p] + datum_.group_sign * b[p]);
  return solver_.count(std::span<const Integer>(t, a.size()));
}

std::vector<LatticeSolution> PointCounter::kernel_solutions(std::size_t line, const WeightVector& b) const {
  std::vector<LatticeSolution> out;
  if (!epsilon_gate(line)) return out;
  solver_.for_each(kernel_target(line, b), [&](std::span<const Integer> c) {
    LatticeSolution s;
    s.m.reserve(c.size());
    for (auto v : c) s.m.push_back(-v);
    out.push_back(std::move(s));
  });
  std::sort(out.begin(), out.end());
  return out;
}

Integer PointCounter::restricted_count(Subset subset, const WeightVector& b) const {
  const std::size_t n = datum_.dimension();
  if (b.size() != tau_.values.size()) throw RankMismatch("b has length " + std::to_string(b.size()));
  WeightVector target(b.size());
  for (std::size_t p = 0; p < b.size(); ++p) target[p] = -datum_.group_sign * b[p];

  if (solver_.full_rank()) {
    // At most one c >= 0 solves the full system; N(A, b) = 1 iff its support is exactly A.
    Integer hits = 0;
    solver_.for_each(target, [&](std::span<const Integer> c) {
      Subset support = 0;
      for (std::size_t h = 0; h < n; ++h) {
        if (c[h] > 0) support |= Subset{1} << h;
      }
      if (support == subset) ++hits;
    });
    return hits;
  }

  // c_h = 1 + c'_h with c' >= 0 over the subset's columns.
  std::vector<WeightVector> cols;
  for (std::size_t h = 0; h < n; ++h) {
    if ((subset >> h) & 1U) {
      cols.push_back(datum_.tangent_weights[h]);
      for (std::size_t p = 0; p < target.size(); ++p) target[p] -= datum_.tangent_weights[h][p];
    }
  }
  return ConeSolver(cols, tau_).count(target);
}

std::vector<RestrictedTerm> PointCounter::restricted_terms(const WeightVector& b) const {
  const std::size_t n = datum_.dimension();
  std::vector<RestrictedTerm> out;
  if (solver_.full_rank()) {
    if (b.size() != tau_.values.size()) throw RankMismatch("b has length " + std::to_string(b.size()));
    WeightVector target(b.size());
    for (std::size_t p = 0; p < b.size(); ++p) target[p] = -datum_.group_sign * b[p];
    solver_.for_each(target, [&](std::span<const Integer> c) {
      Subset support = 0;
      for (std::size_t h = 0; h < n; ++h) {
        if (c[h] > 0) support |= Subset{1} << h;
      }
      out.push_back({support, 1});
    });
    return out;
  }
  for (Subset a = 0; a < (Subset{1} << n); ++a) {
    if (const Integer count = restricted_count(a, b); count != 0) out.push_back({a, count});
  }
  return out;
}

Integer PointCounter::weighted_restricted_sum(const WeightVector& b) const {
  Integer total = 0;
  for (const auto& term : restricted_terms(b)) total += (Integer{1} << subset_size(term.subset)) * term.count;
  return total;
}

// ---------------------------------------------------------------------------

Integer kernel_count(const FixedPointDatum& datum, std::size_t line, const WeightVector& b,
                     const SlopeVector& tau) {
  return PointCounter(datum, scale(tau)).kernel_count(line, b);
}

std::vector<LatticeSolution> enumerate_kernel_solutions(const FixedPointDatum& datum, std::size_t line,
                                                        const WeightVector& b, const SlopeVector& tau) {
  return PointCounter(datum, scale(tau)).kernel_solutions(line, b);
}

Integer restricted_count(const FixedPointDatum& datum, Subset subset, const WeightVector& b,
                         const SlopeVector& tau) {
  return PointCounter(datum, scale(tau)).restricted_count(subset, b);
}

}  // namespace tvi
