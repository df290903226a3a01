#pragma once

// Compact-group multiplicities from torus multiplicities:
//   ind_G^mu = sum_b beta_mu^b ind_T^{rho_b}

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "tvindex/model.hpp"

namespace tvi {

struct BranchingTable {
  std::map<WeightVector, Rational> coefficients;
  std::string label;

  bool operator==(const BranchingTable&) const = default;
};

/// std::nullopt marks a torus multiplicity that is not finite.
using TorusIndex = std::function<std::optional<Integer>(const WeightVector&)>;

/// beta_n^b for the irreducible SU(2) representation on degree-n polynomials:
/// 1/2 at b = +-n, -1/2 at b = +-(n+2), coinciding keys summed.
BranchingTable su2_beta(Integer n);

/// Throws InfiniteMultiplicity if torus_index is non-finite where beta != 0.
Rational apply_branching(const BranchingTable& table, const TorusIndex& torus_index);

/// Torus multiplicities of a setup; always finite.
TorusIndex torus_index_of(const OperatorSetup& setup);

/// apply_branching(su2_beta(n), transverse_index) on a rank-1 setup. With
/// genuine = true the result must be an integer (throws NonIntegral).
Rational su2_index(const OperatorSetup& setup, Integer n, bool genuine = false);

}  // namespace tvi
