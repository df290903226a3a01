#include "doctest.h"

#include "tvindex/errors.hpp"
#include "tvindex/generators.hpp"
#include "tvindex/index.hpp"
#include "tvindex/sweep.hpp"

using namespace tvi;

namespace {

Integer sphere_expected(Integer n) {
  if (n % 2 == 0) return 0;
  return n < 0 ? -1 : 1;
}

const WeightVector kCp12B{0, 1, 0, 0, 76, 0, 0, 0, 0, 0, -51, -24, -2};

// sum_x sum_A S(A, x) N(A, b, x), computed without the kernel path.
Integer index_by_subsets(const PreparedSetup& prepared, const WeightVector& b) {
  Integer total = 0;
  for (const auto& counter : prepared.points()) {
    const std::size_t n = counter.datum().dimension();
    for (Subset a = 0; a < (Subset{1} << n); ++a) {
      const Integer count = counter.restricted_count(a, b);
      if (count != 0) total += s_of_A(counter.datum(), a, prepared.setup().kind) * count;
    }
  }
  return total;
}

}  // namespace

TEST_CASE("sphere index") {
  const auto sphere = gen_sphere_operator();
  const PreparedSetup prepared(sphere);
  for (Integer n = -9; n <= 9; ++n) {
    CAPTURE(n);
    CHECK(prepared.index_value({n}) == sphere_expected(n));
  }
  const auto r = transverse_index(sphere, {3});
  REQUIRE(r.per_point.size() == 2);
  CHECK(r.per_point[0] == PointContribution{"NP", 0});
  CHECK(r.per_point[1] == PointContribution{"SP", 1});
  CHECK(transverse_index(sphere, {-5}).value == -1);
}

TEST_CASE("empty setup") {
  OperatorSetup empty;
  empty.m = 2;
  empty.tau.entries = {1, 2};
  empty.kind = OperatorKind::de_rham;
  CHECK(transverse_index(empty, {0, 0}).value == 0);
  CHECK(transverse_index(empty, {4, -1}).value == 0);
  CHECK(euler_characteristic(empty) == 0);
}

TEST_CASE("form lines") {
  const std::vector<WeightVector> w{{1, 0}, {0, 1}};
  const auto even = form_lines(w, OperatorKind::de_rham, 1);
  REQUIRE(even.size() == 4);
  CHECK(even[0].i == std::vector<int>{2, 2});
  CHECK(even[1].i == std::vector<int>{2, 4});
  CHECK(even[2].i == std::vector<int>{4, 2});
  CHECK(even[3].i == std::vector<int>{4, 4});
  CHECK(even[3].a == WeightVector{1, 1});
  CHECK(even[1].grading == -1);
  CHECK(even[3].grading == 1);
  for (const auto& line : even) CHECK(line.epsilon == std::vector<int>{-1, -1});

  const auto full = form_lines(w, OperatorKind::de_rham, 1, FormBasis::full);
  CHECK(full.size() == 16);
  int de_rham_total = 0;
  for (const auto& line : full) de_rham_total += line.grading;
  CHECK(de_rham_total == 0);  // forms of even and odd degree balance
  for (const auto& line : full) {
    if (line.i == std::vector<int>{3, 1}) {
      CHECK(line.a == WeightVector{-1, 0});
      CHECK(line.epsilon == std::vector<int>{1, 1});
      CHECK(line.grading == -1);
    }
  }

  // Signature chirality on the even lines is (-1)^n times the orientation.
  for (const auto& line : form_lines(w, OperatorKind::signature, -1)) CHECK(line.grading == -1);
  for (const auto& line : form_lines(std::vector<WeightVector>{{2}}, OperatorKind::signature, 1)) {
    CHECK(line.grading == -1);
  }
  CHECK_THROWS_AS(form_grading(std::vector<int>{2}, OperatorKind::generic, 1), WrongOperatorKind);
}

TEST_CASE("s_of_A") {
  const auto cp3 = gen_cpn(3, std::nullopt, OperatorKind::de_rham);
  const auto cp3s = gen_cpn(3, std::nullopt, OperatorKind::signature);
  for (Subset a = 1; a < 8; ++a) CHECK(s_of_A(cp3.points[0], a, OperatorKind::de_rham) == 0);
  CHECK(s_of_A(cp3.points[0], 0, OperatorKind::de_rham) == 1);

  const auto& e1 = cp3s.points[0];  // orientation +1, n = 3
  CHECK(s_of_A(e1, 0, OperatorKind::signature) == -1);
  CHECK(s_of_A(e1, 0b011, OperatorKind::signature) == -4);
  CHECK(s_of_A(e1, 0b111, OperatorKind::signature) == -8);
  const auto& e2 = cp3s.points[1];  // orientation -1
  CHECK(s_of_A(e2, 0b101, OperatorKind::signature) == 4);
}

TEST_CASE("CP^n Euler characteristic and signature") {
  for (int n = 1; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(euler_characteristic(gen_cpn(n)) == n + 1);
    CHECK(signature(gen_cpn(n, std::nullopt, OperatorKind::signature)) == (n % 2 == 0 ? 1 : 0));
  }
  const auto cp2 = gen_cpn(2);
  CHECK(transverse_index(cp2, {0, 0, 0}).value == 3);
  CHECK_THROWS_AS(euler_characteristic(gen_cpn(2, std::nullopt, OperatorKind::signature)), WrongOperatorKind);
  CHECK_THROWS_AS(signature(cp2), WrongOperatorKind);
}

TEST_CASE("SU(2)/T Euler characteristic and signature") {
  CHECK(euler_characteristic(gen_su2_mod_t()) == 2);
  CHECK(signature(gen_su2_mod_t(OperatorKind::signature)) == 0);
  CHECK(b_euler(gen_su2_mod_t(), {2}) == 0);
  CHECK(b_euler(gen_su2_mod_t(), {4}) == 0);
}

TEST_CASE("signature of a single point") {
  OperatorSetup s;
  s.m = 2;
  s.tau.entries = {1, 3};
  s.kind = OperatorKind::signature;
  s.points = {build_form_datum("x", {{1, 0}, {0, 1}}, OperatorKind::signature, 1)};
  CHECK(signature(s) == 1);
}

TEST_CASE("b_euler") {
  const auto cp2 = gen_cpn(2);
  CHECK(b_euler(cp2, {1, 0, -1}) == 0);
  CHECK_THROWS_AS(b_euler(cp2, {0, 0, 0}), ZeroB);
  CHECK_THROWS_AS(b_euler(gen_sphere_operator(), {1}), WrongOperatorKind);
  const auto cp3 = gen_cpn(3);
  for (const auto& b : cpn_admissible_b(3, 3)) CHECK(b_euler(cp3, b) == 0);
}

TEST_CASE("CP^12 signature sum") {
  const auto cp12 = gen_cpn(12, std::nullopt, OperatorKind::signature);
  CHECK(validate_setup(cp12).ok());
  const auto sum = b_signature_sum(cp12, kCp12B);
  CHECK(sum.value == 0);
  REQUIRE(sum.per_point.size() == 13);
  const Integer expected[] = {0, 0, 0, 0, 16, -32, 32, -32, 32, -32, 16, 0, 0};
  for (std::size_t x = 0; x < 13; ++x) {
    CAPTURE(x);
    CHECK(sum.per_point[x].point == "e" + std::to_string(x + 1));
    CHECK(sum.per_point[x].value == expected[x]);
    CHECK(sum.per_point[x].orientation_sign == (x % 2 == 0 ? 1 : -1));
  }
  // [e_5] has one term, supported on the four planes toward e_2, e_11, e_12, e_13.
  REQUIRE(sum.per_point[4].terms.size() == 1);
  CHECK(sum.per_point[4].terms[0].subset == std::vector<int>{2, 10, 11, 12});
  CHECK(sum.per_point[4].terms[0].weight == 16);
  CHECK(sum.per_point[4].terms[0].count == 1);
  CHECK(verify_killing_identity(cp12, kCp12B) == 0);
}

TEST_CASE("signature sum at b = 0") {
  for (int n = 1; n <= 5; ++n) {
    const auto s = gen_cpn(n, std::nullopt, OperatorKind::signature);
    const Integer sign = n % 2 == 0 ? 1 : -1;
    CHECK(b_signature_sum(s, WeightVector(n + 1, 0)).value == sign * signature(s));
  }
}

TEST_CASE("Killing identity on CP^n") {
  for (int n = 1; n <= 4; ++n) {
    const auto s = gen_cpn(n, std::nullopt, OperatorKind::signature);
    const PreparedSetup prepared(s);
    for (const auto& b : cpn_admissible_b(n, 3)) {
      CAPTURE(n);
      CHECK(prepared.signature_sum_value(b) == 0);
    }
  }
  // Single-support b on CP^4.
  const auto cp4 = gen_cpn(4, std::nullopt, OperatorKind::signature);
  for (std::size_t h = 0; h < 5; ++h) {
    for (Integer v : {-3, -1, 1, 3}) {
      WeightVector b(5, 0);
      b[h] = v;
      CHECK(verify_killing_identity(cp4, b) == 0);
    }
  }
}

TEST_CASE("index equals the subset expansion") {
  for (auto kind : {OperatorKind::de_rham, OperatorKind::signature}) {
    for (int n = 1; n <= 3; ++n) {
      const PreparedSetup prepared(gen_cpn(n, std::nullopt, kind));
      for (const auto& b : box_vectors(n + 1, 2, true)) CHECK(prepared.index_value(b) == index_by_subsets(prepared, b));
    }
  }
  const PreparedSetup su2(gen_su2_mod_t(OperatorKind::signature));
  for (Integer b = -6; b <= 6; ++b) CHECK(su2.index_value({b}) == index_by_subsets(su2, {b}));
}

TEST_CASE("signature index is (-1)^n times the signature sum") {
  for (int n = 1; n <= 3; ++n) {
    const PreparedSetup prepared(gen_cpn(n, std::nullopt, OperatorKind::signature));
    const Integer sign = n % 2 == 0 ? 1 : -1;
    for (const auto& b : box_vectors(n + 1, 2, true)) {
      CHECK(prepared.index_value(b) == sign * prepared.signature_sum_value(b));
    }
  }
}

TEST_CASE("corrupted data breaks the identities") {
  SUBCASE("one de Rham grading flipped") {
    auto s = gen_cpn(2);
    s.points[1].lines[3].grading = -s.points[1].lines[3].grading;
    const PreparedSetup prepared(s);
    bool seen = false;
    for (const auto& b : box_vectors(3, 3)) seen = seen || prepared.index_value(b) != 0;
    CHECK(seen);
  }
  SUBCASE("one orientation flipped") {
    auto s = gen_cpn(2, std::nullopt, OperatorKind::signature);
    s.points[0].base_orientation = s.points[0].orientation_sign = -s.points[0].orientation_sign;
    const PreparedSetup prepared(s);
    bool seen = false;
    for (const auto& b : cpn_admissible_b(2, 3)) seen = seen || prepared.signature_sum_value(b) != 0;
    CHECK(seen);
  }
}

TEST_CASE("index rejects b of the wrong length") {
  const PreparedSetup prepared(gen_cpn(2));
  CHECK_THROWS_AS(prepared.index_value({1, 2}), RankMismatch);
  CHECK_THROWS_AS(prepared.signature_sum_value({1}), RankMismatch);
}

TEST_CASE("index does not depend on tau") {
  const std::vector<SlopeVector> taus{
      SlopeVector{{1, 2, 4}}, SlopeVector{{1, 3, 7}}, SlopeVector{{Rational(1, 2), Rational(2, 3), 5}}};
  std::vector<std::vector<Integer>> runs;
  for (const auto& tau : taus) {
    const PreparedSetup prepared(gen_cpn(2, tau));
    std::vector<Integer> values;
    for (const auto& b : box_vectors(3, 4, true)) values.push_back(prepared.index_value(b));
    runs.push_back(values);
  }
  CHECK(runs[0] == runs[1]);
  CHECK(runs[0] == runs[2]);
}
