#include "tvindex/generators.hpp"

#include <algorithm>
#include <set>

#include "tvindex/errors.hpp"
#include "tvindex/index.hpp"

namespace tvi {

SlopeVector default_cpn_tau(int n) {
  SlopeVector tau;
  for (int p = 0; p <= n; ++p) tau.entries.emplace_back(Integer{1} << p);
  return tau;
}

OperatorSetup gen_cpn(int n, std::optional<SlopeVector> tau, OperatorKind kind) {
  if (n < 1) throw Error("gen_cpn needs n >= 1, got " + std::to_string(n));
  if (kind == OperatorKind::generic) throw WrongOperatorKind("gen_cpn builds de Rham or signature data");
  const SlopeVector slope = tau.value_or(default_cpn_tau(n));
  if (slope.size() != static_cast<std::size_t>(n + 1)) {
    throw InvalidTau("CP^" + std::to_string(n) + " needs " + std::to_string(n + 1) + " tau entries");
  }
  if (slope.entries.front() <= 0 ||
      std::adjacent_find(slope.entries.begin(), slope.entries.end(), std::greater_equal<>()) != slope.entries.end()) {
    throw InvalidTau("CP^n tau must satisfy 0 < tau_1 < ... < tau_{n+1}");
  }

  OperatorSetup setup;
  setup.m = n + 1;
  setup.tau = slope;
  setup.kind = kind;
  for (int l = 0; l <= n; ++l) {
    FixedPointDatum raw;
    raw.name = "e" + std::to_string(l + 1);
    for (int h = 0; h <= n; ++h) {
      if (h == l) continue;
      WeightVector k(n + 1, 0);
      k[h] += 1;
      k[l] -= 1;
      raw.tangent_weights.push_back(std::move(k));
    }
    const FixedPointDatum normalized = normalize_orientation(raw, slope);
    setup.points.push_back(build_form_datum(raw.name, normalized.tangent_weights, kind, normalized.orientation_sign));
  }
  return setup;
}

namespace {

SlopeVector rank_one_tau(const std::optional<SlopeVector>& tau) {
  SlopeVector slope = tau.value_or(SlopeVector{{Rational(1)}});
  if (slope.size() != 1 || slope.entries.front() <= 0) throw InvalidTau("expected one positive tau entry");
  return slope;
}

}  // namespace

OperatorSetup gen_sphere_operator(std::optional<SlopeVector> tau) {
  OperatorSetup setup;
  setup.m = 1;
  setup.tau = rank_one_tau(tau);
  setup.kind = OperatorKind::generic;

  FixedPointDatum north;
  north.name = "NP";
  north.tangent_weights = {{2}};
  north.lines = {{{-1}, +1, {+1}}, {{1}, -1, {-1}}};

  FixedPointDatum south;
  south.name = "SP";
  south.tangent_weights = {{2}};
  south.lines = {{{1}, +1, {-1}}, {{-1}, -1, {+1}}};
  south.group_sign = -1;

  setup.points = {north, south};
  return setup;
}

OperatorSetup gen_su2_mod_t(OperatorKind kind, std::optional<SlopeVector> tau) {
  if (kind == OperatorKind::generic) throw WrongOperatorKind("gen_su2_mod_t builds de Rham or signature data");
  OperatorSetup setup;
  setup.m = 1;
  setup.tau = rank_one_tau(tau);
  setup.kind = kind;
  const std::pair<const char*, Integer> poles[] = {{"[1:0]", 2}, {"[0:1]", -2}};
  for (const auto& [name, weight] : poles) {
    FixedPointDatum raw;
    raw.name = name;
    raw.tangent_weights = {{weight}};
    const FixedPointDatum normalized = normalize_orientation(raw, setup.tau);
    setup.points.push_back(build_form_datum(name, normalized.tangent_weights, kind, normalized.orientation_sign));
  }
  return setup;
}

std::vector<WeightVector> cpn_admissible_b(int n, Integer bound) {
  std::set<WeightVector> found;
  const std::size_t dim = static_cast<std::size_t>(n) + 1;
  for (std::size_t l = 0; l < dim; ++l) {
    // Odometer over b_h, h != l, with the sign pattern fixed by l.
    std::vector<std::size_t> others;
    for (std::size_t h = 0; h < dim; ++h) {
      if (h != l) others.push_back(h);
    }
    WeightVector b(dim, 0);
    while (true) {
      Integer sum = 0;
      for (auto h : others) sum += b[h];
      b[l] = -sum;
      if (std::abs(b[l]) <= bound && !is_zero(b)) found.insert(b);
      std::size_t pos = 0;
      for (; pos < others.size(); ++pos) {
        const auto h = others[pos];
        const Integer step = h < l ? 1 : -1;
        if (std::abs(b[h] + step) <= bound) {
          b[h] += step;
          break;
        }
        b[h] = 0;
      }
      if (pos == others.size()) break;
    }
  }
  return {found.begin(), found.end()};
}

}  // namespace tvi
