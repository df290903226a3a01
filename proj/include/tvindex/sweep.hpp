#pragma once

// Data-parallel sweeps over many representations rho_b of one prepared
// setup. The serial namespace holds the reference loops the parallel
// kernels are tested against.

#include <span>
#include <vector>

#include "tvindex/index.hpp"

namespace tvi {

struct SweepFailure {
  WeightVector b;
  Integer residual = 0;

  bool operator==(const SweepFailure&) const = default;
};

/// Every b in [-bound, bound]^m in lexicographic order, optionally skipping 0.
std::vector<WeightVector> box_vectors(int m, Integer bound, bool include_zero = false);

/// Nonzero b in [-bound, bound]^m lying in the cone {-eta sum c_h k_h, c >= 0}
/// of at least one fixed point, i.e. the b for which some N(A, b, x) != 0.
/// Sorted, without duplicates.
std::vector<WeightVector> admissible_vectors(const PreparedSetup& setup, Integer bound);

/// Pairs (b, value) with value != 0.
std::vector<SweepFailure> nonzero_entries(std::span<const WeightVector> bs, std::span<const Integer> values);

/// Caps the OpenMP team size; 0 restores the runtime default.
void set_thread_limit(int threads);
int max_threads();

namespace serial {

std::vector<Integer> index_values(const PreparedSetup& setup, std::span<const WeightVector> bs);
std::vector<Integer> signature_sums(const PreparedSetup& setup, std::span<const WeightVector> bs);

}  // namespace serial

namespace parallel {

std::vector<Integer> index_values(const PreparedSetup& setup, std::span<const WeightVector> bs);
std::vector<Integer> signature_sums(const PreparedSetup& setup, std::span<const WeightVector> bs);

}  // namespace parallel

}  // namespace tvi
