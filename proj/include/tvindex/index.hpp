#pragma once

// Torus index multiplicities from fixed-point data, and the de Rham and
// signature specializations.
//
//   ind^{rho_b} = sum_points sum_lines grading(j) * kernel_count(j, b)

#include <string>
#include <vector>

#include "tvindex/lattice.hpp"
#include "tvindex/model.hpp"

namespace tvi {

struct PointContribution {
  std::string point;
  Integer value = 0;

  bool operator==(const PointContribution&) const = default;
};

struct IndexResult {
  Integer value = 0;
  std::vector<PointContribution> per_point;
};

/// Which part of the 4^n form basis omega_i to emit. Only i in {2,4}^n has
/// every epsilon = -1; the other lines never reach the kernel.
enum class FormBasis { even, full };

struct FormLine {
  std::vector<int> i;  // multi-index in {1,2,3,4}^n
  WeightVector a;
  std::vector<int> epsilon;
  int grading = 1;
};

/// Grading of omega_i: form-degree parity for de Rham, chirality
/// orientation_sign * prod_q eps_iq for the signature operator.
int form_grading(std::span<const int> i, OperatorKind kind, int orientation_sign);

std::vector<FormLine> form_lines(std::span<const WeightVector> weights, OperatorKind kind, int orientation_sign,
                                 FormBasis basis = FormBasis::even);

/// Fixed point of the de Rham or signature operator on Lambda^* T^*M.
/// `weights` must already be normalized.
FixedPointDatum build_form_datum(std::string name, std::vector<WeightVector> weights, OperatorKind kind,
                                 int orientation_sign, FormBasis basis = FormBasis::even);

/// S(A, x) = sum over i in I_A of sign(i).
Integer s_of_A(const FixedPointDatum& datum, Subset subset, OperatorKind kind);

struct SubsetTerm {
  std::vector<int> subset;  // 1-based plane indices
  Integer weight = 0;       // 2^|A|
  Integer count = 0;        // N(A, b, x)
};

struct PointSignatureTerms {
  std::string point;
  int orientation_sign = 1;
  Integer value = 0;  // orientation_sign * sum_A 2^|A| N(A, b, x)
  std::vector<SubsetTerm> terms;
};

struct SignatureSum {
  Integer value = 0;
  std::vector<PointSignatureTerms> per_point;
};

/// A validated, normalized setup with one lattice engine per point. Immutable
/// after construction and safe to query from several threads.
class PreparedSetup {
 public:
  explicit PreparedSetup(const OperatorSetup& setup);

  const OperatorSetup& setup() const { return setup_; }
  const std::vector<PointCounter>& points() const { return points_; }

  IndexResult index(const WeightVector& b) const;
  Integer index_value(const WeightVector& b) const;
  /// dim ker K^{rho,+} - dim ker K^{rho,-} at one point.
  Integer point_index(std::size_t point, const WeightVector& b) const;

  SignatureSum signature_sum(const WeightVector& b) const;
  Integer signature_sum_value(const WeightVector& b) const;

 private:
  void check_b(const WeightVector& b) const;

  OperatorSetup setup_;
  std::vector<PointCounter> points_;
};

IndexResult transverse_index(const OperatorSetup& setup, const WeightVector& b);

/// Number of fixed points; throws if it disagrees with transverse_index(setup, 0).
Integer euler_characteristic(const OperatorSetup& setup);

/// (-1)^n sum orientation_sign.
Integer signature(const OperatorSetup& setup);

/// transverse_index at b != 0 on a de Rham setup.
Integer b_euler(const OperatorSetup& setup, const WeightVector& b);

SignatureSum b_signature_sum(const OperatorSetup& setup, const WeightVector& b);

/// Left side of the Killing identity sum_x sign(V,x) sum_A 2^|A| N(A,b,x);
/// zero for b != 0 whenever the data comes from a torus action.
Integer verify_killing_identity(const OperatorSetup& setup, const WeightVector& b);

}  // namespace tvi
