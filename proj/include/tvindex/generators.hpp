#pragma once

// Fixed-point data of the worked examples.

#include <optional>

#include "tvindex/model.hpp"

namespace tvi {

/// (1, 2, 4, ..., 2^n).
SlopeVector default_cpn_tau(int n);

/// T^{n+1} acting diagonally on CP^n. Fixed points [e_1..e_{n+1}]; at [e_l]
/// the raw weights are e_h - e_l, flipped where tau_h < tau_l. tau must be
/// strictly increasing (InvalidTau otherwise).
OperatorSetup gen_cpn(int n, std::optional<SlopeVector> tau = std::nullopt,
                      OperatorKind kind = OperatorKind::de_rham);

/// The circle-equivariant operator on S^2 with weight 2 at both poles; the
/// south pole carries the reversed group parameter.
OperatorSetup gen_sphere_operator(std::optional<SlopeVector> tau = std::nullopt);

/// SU(2)/T = S^2 with the maximal torus acting by [e^{2is} alpha, beta]:
/// weights +2 and -2 at the two fixed points.
OperatorSetup gen_su2_mod_t(OperatorKind kind = OperatorKind::de_rham,
                            std::optional<SlopeVector> tau = std::nullopt);

/// Nonzero b with |b_i| <= bound admitted by the CP^n constraints at some
/// [e_l]: b_h >= 0 for h < l, b_h <= 0 for h > l, b_l = -sum_{h != l} b_h.
/// Sorted, without duplicates.
std::vector<WeightVector> cpn_admissible_b(int n, Integer bound);

}  // namespace tvi
