#include "tvindex/model.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tvindex/errors.hpp"

namespace tvi {

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::generic: return "generic";
    case OperatorKind::de_rham: return "deRham";
    case OperatorKind::signature: return "signature";
  }
  return "generic";
}

OperatorKind parse_operator_kind(std::string_view text) {
  if (text == "generic") return OperatorKind::generic;
  if (text == "deRham") return OperatorKind::de_rham;
  if (text == "signature") return OperatorKind::signature;
  throw ParseError("unknown operator_kind \"" + std::string(text) + "\"");
}

Integer ScaledTau::dot(std::span<const Integer> v) const {
  Integer s = 0;
  const std::size_t n = std::min(v.size(), values.size());
  for (std::size_t p = 0; p < n; ++p) s += v[p] * values[p];
  return s;
}

ScaledTau scale(const SlopeVector& tau) {
  ScaledTau out;
  for (const auto& t : tau.entries) out.scale = std::lcm(out.scale, t.denominator());
  out.values.reserve(tau.size());
  for (const auto& t : tau.entries) out.values.push_back(t.numerator() * (out.scale / t.denominator()));
  return out;
}

namespace {

bool is_sign(int s) { return s == 1 || s == -1; }

}  // namespace

ValidationReport validate_setup(const OperatorSetup& setup) {
  ValidationReport report;
  auto flag = [&](std::string msg) { report.issues.push_back(std::move(msg)); };
  const auto m = static_cast<std::size_t>(std::max(setup.m, 0));

  if (setup.m < 0) flag("m: torus rank must be nonnegative, got " + std::to_string(setup.m));
  if (setup.tau.size() != m) {
    flag("tau: length " + std::to_string(setup.tau.size()) + " does not match m = " + std::to_string(m));
  }
  for (std::size_t p = 0; p < setup.tau.size(); ++p) {
    if (setup.tau.entries[p] <= 0) {
      flag("tau[" + std::to_string(p) + "]: entry " + to_string(setup.tau.entries[p]) + " is not positive");
    }
  }
  const bool tau_usable = report.ok();
  const ScaledTau scaled = scale(setup.tau);

  std::set<std::string> names;
  for (const auto& pt : setup.points) {
    const std::string where = "point \"" + pt.name + "\"";
    if (!names.insert(pt.name).second) flag(where + ": duplicate name");
    if (!is_sign(pt.base_orientation)) flag(where + ": base_orientation must be +1 or -1");
    if (!is_sign(pt.group_sign)) flag(where + ": group_sign must be +1 or -1");
    const std::size_t n = pt.tangent_weights.size();
    for (std::size_t l = 0; l < n; ++l) {
      const auto& k = pt.tangent_weights[l];
      const std::string wl = where + ": tangent_weights[" + std::to_string(l) + "]";
      if (k.size() != m) {
        flag(wl + ": length " + std::to_string(k.size()) + " does not match m = " + std::to_string(m));
      } else if (tau_usable && scaled.dot(k) == 0) {
        flag(wl + ": kappa = k.tau is 0 (tau is not generic for this weight)");
      }
    }
    for (std::size_t j = 0; j < pt.lines.size(); ++j) {
      const auto& line = pt.lines[j];
      const std::string wj = where + ": lines[" + std::to_string(j) + "]";
      if (line.a.size() != m) {
        flag(wj + ".a: length " + std::to_string(line.a.size()) + " does not match m = " + std::to_string(m));
      }
      if (!is_sign(line.grading)) flag(wj + ".grading must be +1 or -1");
      if (line.epsilon.size() != n) {
        flag(wj + ".epsilon: length " + std::to_string(line.epsilon.size()) + " does not match n = " +
             std::to_string(n));
      }
      for (std::size_t l = 0; l < line.epsilon.size(); ++l) {
        if (!is_sign(line.epsilon[l])) {
          flag(wj + ".epsilon[" + std::to_string(l) + "]: entry " + std::to_string(line.epsilon[l]) +
               " is not +1 or -1");
        }
      }
    }
  }
  return report;
}

void require_valid(const OperatorSetup& setup) {
  const auto report = validate_setup(setup);
  if (report.ok()) return;
  std::string msg = "invalid setup:";
  for (const auto& issue : report.issues) msg += "\n  " + issue;
  throw InvalidSetup(msg, report.issues);
}

FixedPointDatum normalize_orientation(const FixedPointDatum& datum, const SlopeVector& tau) {
  const ScaledTau scaled = scale(tau);
  FixedPointDatum out = datum;
  for (std::size_t l = 0; l < out.tangent_weights.size(); ++l) {
    auto& k = out.tangent_weights[l];
    if (k.size() != scaled.values.size()) {
      throw RankMismatch("point \"" + datum.name + "\": tangent weight length differs from tau");
    }
    const Integer kap = scaled.dot(k);
    if (kap == 0) {
      throw DegenerateWeight("point \"" + datum.name + "\": tangent weight " + std::to_string(l + 1) +
                             " has k.tau = 0");
    }
    if (kap < 0) {
      for (auto& x : k) x = -x;
      out.orientation_sign = -out.orientation_sign;
    }
  }
  return out;
}

OperatorSetup normalize_setup(const OperatorSetup& setup) {
  require_valid(setup);
  OperatorSetup out = setup;
  for (auto& pt : out.points) pt = normalize_orientation(pt, setup.tau);
  return out;
}

bool is_normalized(const FixedPointDatum& datum, const ScaledTau& tau) {
  return std::all_of(datum.tangent_weights.begin(), datum.tangent_weights.end(), [&](const auto& k) {
    return k.size() == tau.values.size() && tau.dot(k) > 0;
  });
}

void require_normalized(const FixedPointDatum& datum, const ScaledTau& tau) {
  if (!is_normalized(datum, tau)) {
    throw NotNormalized("point \"" + datum.name + "\": some tangent weight has k.tau <= 0");
  }
}

std::vector<Rational> kappa(const FixedPointDatum& datum, const SlopeVector& tau) {
  const ScaledTau scaled = scale(tau);
  require_normalized(datum, scaled);
  std::vector<Rational> out;
  out.reserve(datum.dimension());
  for (const auto& k : datum.tangent_weights) out.push_back(scaled.unscale(scaled.dot(k)));
  return out;
}

WeightVector operator+(const WeightVector& x, const WeightVector& y) {
  WeightVector out(x);
  for (std::size_t p = 0; p < out.size(); ++p) out[p] += y[p];
  return out;
}

WeightVector operator-(const WeightVector& x, const WeightVector& y) {
  WeightVector out(x);
  for (std::size_t p = 0; p < out.size(); ++p) out[p] -= y[p];
  return out;
}

WeightVector operator*(Integer s, const WeightVector& x) {
  WeightVector out(x);
  for (auto& v : out) v *= s;
  return out;
}

bool is_zero(std::span<const Integer> v) {
  return std::all_of(v.begin(), v.end(), [](Integer x) { return x == 0; });
}

}  // namespace tvi
