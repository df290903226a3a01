#pragma once

// Spectrum of the harmonic-oscillator model operator at the fixed points,
// restricted to sections of type rho_b, up to an inclusive cutoff.
//
// At a point with frequencies kappa_l, an eigensection is labelled by a line
// j, an angular vector m in Z^n with sum m_h k_h = a_j + eta b, and radial
// levels d in Z_{>=0}^n. Its eigenvalue is 2 sum_l kappa_l c_l with
// c_l = |m_l| + m_l + 2 d_l + 1 + eps_jl.

#include <string>
#include <vector>

#include "tvindex/model.hpp"

namespace tvi {

enum class SpectrumMode {
  // Eigenvalues are compared as formal sums 2 sum c_l k_l in Z^m, i.e. as
  // they would compare for a Q-independent slope.
  generic,
  // Eigenvalues are compared as rationals at the given tau.
  numeric,
};

std::string to_string(SpectrumMode mode);
SpectrumMode parse_spectrum_mode(std::string_view text);

struct EigenSolution {
  std::string point;
  std::size_t line_index = 0;
  std::vector<Integer> m;
  std::vector<Integer> d;
  std::vector<Integer> coeff;
  Rational lambda;
  WeightVector formal;  // 2 sum_l coeff_l k_l; lambda = formal . tau
  int grading = 1;
};

struct SpectrumEntry {
  Rational lambda;
  WeightVector formal;  // empty in numeric mode
  Integer multiplicity = 0;
  Integer plus = 0;   // part of the multiplicity carried by E+ lines
  Integer minus = 0;  // part carried by E- lines

  bool operator==(const SpectrumEntry&) const = default;
};

struct SpectrumTable {
  std::vector<SpectrumEntry> entries;  // ascending in (lambda, formal)
  SpectrumMode mode = SpectrumMode::generic;

  Integer total_multiplicity() const;
  /// Multiplicity at lambda (summed over formal weights in generic mode).
  Integer multiplicity_at(const Rational& lambda) const;
  const SpectrumEntry* kernel() const;

  bool operator==(const SpectrumTable&) const = default;
};

/// Every eigen-solution at one normalized point with lambda <= cutoff.
std::vector<EigenSolution> enumerate_eigen_solutions(const FixedPointDatum& datum, const WeightVector& b,
                                                     const SlopeVector& tau, const Rational& cutoff);

SpectrumTable tabulate(const std::vector<EigenSolution>& solutions, SpectrumMode mode);

SpectrumTable point_spectrum(const FixedPointDatum& datum, const WeightVector& b, const SlopeVector& tau,
                             const Rational& cutoff, SpectrumMode mode = SpectrumMode::generic);

/// Multiset union of the point spectra; multiplicities add on equal keys.
SpectrumTable total_spectrum(const OperatorSetup& setup, const WeightVector& b, const Rational& cutoff,
                             SpectrumMode mode = SpectrumMode::generic);

/// Generic table collapsed onto numeric keys.
SpectrumTable to_numeric(const SpectrumTable& generic);

}  // namespace tvi
