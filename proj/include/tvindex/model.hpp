#pragma once

// Fixed-point data of a torus-equivariant operator: tangent weights, bundle
// weight lines, orientation bookkeeping, and the slope vector tau that picks
// the perturbing Killing field.

#include <span>
#include <string>
#include <vector>

#include "tvindex/rational.hpp"

namespace tvi {

/// Torus character exponent in Z^m.
using WeightVector = std::vector<Integer>;

enum class OperatorKind { generic, de_rham, signature };

std::string to_string(OperatorKind kind);
OperatorKind parse_operator_kind(std::string_view text);

struct SlopeVector {
  std::vector<Rational> entries;

  std::size_t size() const { return entries.size(); }
  bool operator==(const SlopeVector&) const = default;
};

/// tau rescaled by the lcm of its denominators: kappa comparisons and all
/// counting bounds can then be done in integers.
struct ScaledTau {
  std::vector<Integer> values;
  Integer scale = 1;

  Integer dot(std::span<const Integer> v) const;
  Rational unscale(Integer x) const { return Rational(x, scale); }
};

ScaledTau scale(const SlopeVector& tau);

struct BundleWeightLine {
  WeightVector a;
  int grading = 1;           // +1: line lies in E+, -1: in E-
  std::vector<int> epsilon;  // eigenvalue of ic(dvol_l) on this line, one per tangent plane

  bool operator==(const BundleWeightLine&) const = default;
};

struct FixedPointDatum {
  std::string name;
  std::vector<WeightVector> tangent_weights;
  std::vector<BundleWeightLine> lines;
  int base_orientation = 1;
  // Accumulated by normalize_orientation; equals base_orientation before any flip.
  int orientation_sign = 1;
  // -1 where the torus parameter is reversed at this point; acts as b -> -b.
  int group_sign = 1;

  std::size_t dimension() const { return tangent_weights.size(); }
  bool operator==(const FixedPointDatum&) const = default;
};

struct OperatorSetup {
  int m = 0;
  SlopeVector tau;
  std::vector<FixedPointDatum> points;
  OperatorKind kind = OperatorKind::generic;

  bool operator==(const OperatorSetup&) const = default;
};

struct ValidationReport {
  std::vector<std::string> issues;

  bool ok() const { return issues.empty(); }
};

ValidationReport validate_setup(const OperatorSetup& setup);

/// Throws InvalidSetup carrying the report when the setup is unusable.
void require_valid(const OperatorSetup& setup);

/// Negates every tangent weight with k.tau < 0, toggling orientation_sign once per flip.
/// Idempotent. Throws DegenerateWeight when some k.tau == 0.
FixedPointDatum normalize_orientation(const FixedPointDatum& datum, const SlopeVector& tau);

/// Validates and normalizes every point.
OperatorSetup normalize_setup(const OperatorSetup& setup);

/// (k_1.tau, ..., k_n.tau); throws NotNormalized if any entry is <= 0.
std::vector<Rational> kappa(const FixedPointDatum& datum, const SlopeVector& tau);

bool is_normalized(const FixedPointDatum& datum, const ScaledTau& tau);
void require_normalized(const FixedPointDatum& datum, const ScaledTau& tau);

WeightVector operator+(const WeightVector& x, const WeightVector& y);
WeightVector operator-(const WeightVector& x, const WeightVector& y);
WeightVector operator*(Integer s, const WeightVector& x);
bool is_zero(std::span<const Integer> v);

}  // namespace tvi
