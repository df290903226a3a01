#include "tvindex/branching.hpp"

#include <memory>

#include "tvindex/errors.hpp"
#include "tvindex/index.hpp"

namespace tvi {

BranchingTable su2_beta(Integer n) {
  if (n < 0) throw Error("su2_beta needs n >= 0, got " + std::to_string(n));
  BranchingTable table;
  table.label = "SU(2) mu_" + std::to_string(n);
  const Rational half(1, 2);
  for (Integer b : {n, -n}) table.coefficients[{b}] += half;
  for (Integer b : {n + 2, -n - 2}) table.coefficients[{b}] -= half;
  return table;
}

Rational apply_branching(const BranchingTable& table, const TorusIndex& torus_index) {
  Rational total = 0;
  for (const auto& [b, beta] : table.coefficients) {
    if (beta == 0) continue;
    const auto value = torus_index(b);
    if (!value) {
      std::string key;
      for (auto x : b) key += (key.empty() ? "" : ",") + std::to_string(x);
      throw InfiniteMultiplicity("torus multiplicity at b = (" + key + ") is not finite");
    }
    total += beta * *value;
  }
  return total;
}

TorusIndex torus_index_of(const OperatorSetup& setup) {
  auto prepared = std::make_shared<const PreparedSetup>(setup);
  return [prepared](const WeightVector& b) -> std::optional<Integer> { return prepared->index_value(b); };
}

Rational su2_index(const OperatorSetup& setup, Integer n, bool genuine) {
  if (setup.m != 1) throw RankMismatch("su2_index needs torus rank 1, got " + std::to_string(setup.m));
  const Rational value = apply_branching(su2_beta(n), torus_index_of(setup));
  if (genuine && value.denominator() != 1) {
    throw NonIntegral("SU(2) multiplicity " + to_string(value) + " is not an integer");
  }
  return value;
}

}  // namespace tvi
