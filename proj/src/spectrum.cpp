#include "tvindex/spectrum.hpp"

#include <algorithm>
#include <map>

#include "tvindex/errors.hpp"
#include "tvindex/lattice.hpp"

namespace tvi {

std::string to_string(SpectrumMode mode) { return mode == SpectrumMode::generic ? "generic" : "numeric"; }

SpectrumMode parse_spectrum_mode(std::string_view text) {
  if (text == "generic") return SpectrumMode::generic;
  if (text == "numeric") return SpectrumMode::numeric;
  throw ParseError("unknown spectrum mode \"" + std::string(text) + "\"");
}

Integer SpectrumTable::total_multiplicity() const {
  Integer total = 0;
  for (const auto& e : entries) total += e.multiplicity;
  return total;
}

Integer SpectrumTable::multiplicity_at(const Rational& lambda) const {
  Integer total = 0;
  for (const auto& e : entries) {
    if (e.lambda == lambda) total += e.multiplicity;
  }
  return total;
}

const SpectrumEntry* SpectrumTable::kernel() const {
  if (!entries.empty() && entries.front().lambda == 0) return &entries.front();
  return nullptr;
}

namespace {

struct LineSearch {
  const FixedPointDatum& datum;
  const ScaledTau& tau;
  std::size_t line;
  WeightVector target;  // a_j + eta b
  std::vector<Integer> kap;
  std::map<Subset, ConeSolver>& solvers;
  std::vector<EigenSolution>& out;

  std::vector<Integer> p, d;

  std::size_t n() const { return datum.dimension(); }

  // Positive parts of m first: each unit of p_l costs 4 kappa_l.
  void positive(std::size_t l, Integer budget) {
    if (l == n()) {
      close_negative(budget);
      return;
    }
    for (Integer v = 0; 4 * kap[l] * v <= budget; ++v) {
      p[l] = v;
      positive(l + 1, budget - 4 * kap[l] * v);
    }
    p[l] = 0;
  }

  // m_h = -q_h on planes with p_h = 0; q >= 0 is pinned by the weight equation.
  void close_negative(Integer budget) {
    Subset free = 0;
    std::vector<WeightVector> cols;
    WeightVector rhs(target.size());
    for (std::size_t q = 0; q < rhs.size(); ++q) rhs[q] = -target[q];
    for (std::size_t h = 0; h < n(); ++h) {
      const auto& k = datum.tangent_weights[h];
      if (p[h] == 0) {
        free |= Subset{1} << h;
        cols.push_back(k);
      } else {
        for (std::size_t q = 0; q < rhs.size(); ++q) rhs[q] += p[h] * k[q];
      }
    }
    auto it = solvers.find(free);
    if (it == solvers.end()) it = solvers.emplace(free, ConeSolver(cols, tau)).first;
    it->second.for_each(rhs, [&](std::span<const Integer> qs) {
      std::vector<Integer> m(n());
      std::size_t f = 0;
      for (std::size_t h = 0; h < n(); ++h) m[h] = p[h] == 0 ? -qs[f++] : p[h];
      radial(0, budget, m);
    });
  }

  void radial(std::size_t l, Integer budget, const std::vector<Integer>& m) {
    if (l == n()) {
      emit(m);
      return;
    }
    for (Integer v = 0; 4 * kap[l] * v <= budget; ++v) {
      d[l] = v;
      radial(l + 1, budget - 4 * kap[l] * v, m);
    }
    d[l] = 0;
  }

  void emit(const std::vector<Integer>& m) {
    const auto& line_data = datum.lines[line];
    EigenSolution s;
    s.point = datum.name;
    s.line_index = line;
    s.m = m;
    s.d = d;
    s.grading = line_data.grading;
    s.formal.assign(target.size(), 0);
    Integer scaled_lambda = 0;
    for (std::size_t l = 0; l < n(); ++l) {
      const Integer c = std::abs(m[l]) + m[l] + 2 * d[l] + 1 + line_data.epsilon[l];
      s.coeff.push_back(c);
      scaled_lambda += 2 * kap[l] * c;
      for (std::size_t q = 0; q < target.size(); ++q) s.formal[q] += 2 * c * datum.tangent_weights[l][q];
    }
    s.lambda = tau.unscale(scaled_lambda);
    out.push_back(std::move(s));
  }
};

}  // namespace

std::vector<EigenSolution> enumerate_eigen_solutions(const FixedPointDatum& datum, const WeightVector& b,
                                                     const SlopeVector& tau, const Rational& cutoff) {
  if (cutoff < 0) throw NegativeCutoff("cutoff " + to_string(cutoff) + " is negative");
  const ScaledTau scaled = scale(tau);
  require_normalized(datum, scaled);
  if (b.size() != scaled.values.size()) throw RankMismatch("b has length " + std::to_string(b.size()));

  const std::size_t n = datum.dimension();
  std::vector<Integer> kap;
  for (const auto& k : datum.tangent_weights) kap.push_back(scaled.dot(k));
  const Integer cap = floor(cutoff * scaled.scale);

  std::vector<EigenSolution> out;
  std::map<Subset, ConeSolver> solvers;
  for (std::size_t j = 0; j < datum.lines.size(); ++j) {
    const auto& line = datum.lines[j];
    Integer base = 0;
    for (std::size_t l = 0; l < n; ++l) base += 2 * kap[l] * (1 + line.epsilon[l]);
    if (base > cap) continue;
    WeightVector target(b.size());
    for (std::size_t q = 0; q < b.size(); ++q) target[q] = line.a[q] + datum.group_sign * b[q];
    LineSearch search{datum, scaled, j, std::move(target), kap, solvers, out, std::vector<Integer>(n, 0),
                      std::vector<Integer>(n, 0)};
    search.positive(0, cap - base);
  }
  return out;
}

SpectrumTable tabulate(const std::vector<EigenSolution>& solutions, SpectrumMode mode) {
  std::map<std::pair<Rational, WeightVector>, SpectrumEntry> acc;
  for (const auto& s : solutions) {
    WeightVector key = mode == SpectrumMode::generic ? s.formal : WeightVector{};
    auto& e = acc[{s.lambda, key}];
    e.lambda = s.lambda;
    e.formal = std::move(key);
    ++e.multiplicity;
    (s.grading > 0 ? e.plus : e.minus) += 1;
  }
  SpectrumTable table;
  table.mode = mode;
  for (auto& [key, e] : acc) table.entries.push_back(std::move(e));
  return table;
}

SpectrumTable point_spectrum(const FixedPointDatum& datum, const WeightVector& b, const SlopeVector& tau,
                             const Rational& cutoff, SpectrumMode mode) {
  return tabulate(enumerate_eigen_solutions(datum, b, tau, cutoff), mode);
}

SpectrumTable total_spectrum(const OperatorSetup& setup, const WeightVector& b, const Rational& cutoff,
                             SpectrumMode mode) {
  if (cutoff < 0) throw NegativeCutoff("cutoff " + to_string(cutoff) + " is negative");
  const OperatorSetup normalized = normalize_setup(setup);
  const auto count = static_cast<std::ptrdiff_t>(normalized.points.size());
  std::vector<std::vector<EigenSolution>> per_point(normalized.points.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      per_point[i] = enumerate_eigen_solutions(normalized.points[i], b, normalized.tau, cutoff);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  std::vector<EigenSolution> all;
  for (auto& v : per_point) all.insert(all.end(), v.begin(), v.end());
  return tabulate(all, mode);
}

SpectrumTable to_numeric(const SpectrumTable& generic) {
  SpectrumTable out;
  out.mode = SpectrumMode::numeric;
  for (const auto& e : generic.entries) {
    if (!out.entries.empty() && out.entries.back().lambda == e.lambda) {
      auto& back = out.entries.back();
      back.multiplicity += e.multiplicity;
      back.plus += e.plus;
      back.minus += e.minus;
    } else {
      out.entries.push_back({e.lambda, {}, e.multiplicity, e.plus, e.minus});
    }
  }
  return out;
}

}  // namespace tvi
