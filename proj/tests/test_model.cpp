#include "doctest.h"

#include "tvindex/errors.hpp"
#include "tvindex/generators.hpp"
#include "tvindex/model.hpp"

using namespace tvi;

namespace {

WeightVector e(std::size_t m, std::size_t h) {
  WeightVector v(m, 0);
  v[h] = 1;
  return v;
}

FixedPointDatum raw_cpn_point(int n, int l) {
  FixedPointDatum pt;
  pt.name = "e" + std::to_string(l);
  for (int h = 1; h <= n + 1; ++h) {
    if (h != l) pt.tangent_weights.push_back(e(n + 1, h - 1) - e(n + 1, l - 1));
  }
  return pt;
}

}  // namespace

TEST_CASE("rational text form") {
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-8, 4)) == "-2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-10/4") == Rational(-5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("floor of rationals") {
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(floor(Rational(-4)) == -4);
  CHECK(floor_div(-1, 3) == -1);
  CHECK(floor_div(1, -3) == -1);
  CHECK(floor_div(6, 3) == 2);
}

TEST_CASE("mixed rational and integer comparisons terminate") {
  const Rational half(1, 2);
  CHECK(half > 0);
  CHECK(0 < half);
  CHECK(half != 0);
  CHECK(Rational(0) == 0);
  CHECK(Rational(4, 2) == Integer{2});
  CHECK(half <= 1);
  CHECK(half >= Integer{0});
  CHECK_FALSE(half == 0);
}

TEST_CASE("scaled tau clears denominators") {
  const ScaledTau s = scale(SlopeVector{{Rational(1, 2), Rational(2, 3)}});
  CHECK(s.scale == 6);
  CHECK(s.values == std::vector<Integer>{3, 4});
  CHECK(s.dot(std::vector<Integer>{1, 1}) == 7);
  CHECK(s.unscale(7) == Rational(7, 6));
}

TEST_CASE("operator kind names") {
  for (auto k : {OperatorKind::generic, OperatorKind::de_rham, OperatorKind::signature}) {
    CHECK(parse_operator_kind(to_string(k)) == k);
  }
  CHECK(to_string(OperatorKind::de_rham) == "deRham");
  CHECK_THROWS_AS(parse_operator_kind("euler"), ParseError);
}

TEST_CASE("validate_setup") {
  SUBCASE("generated data is clean") {
    CHECK(validate_setup(gen_sphere_operator()).ok());
    CHECK(validate_setup(gen_cpn(3)).ok());
    CHECK(validate_setup(gen_su2_mod_t()).ok());
  }
  SUBCASE("zero points") {
    OperatorSetup s;
    s.m = 2;
    s.tau.entries = {1, 3};
    CHECK(validate_setup(s).ok());
  }
  SUBCASE("a weight orthogonal to tau") {
    OperatorSetup s = gen_cpn(2);
    s.points[0].tangent_weights[1] = {-2, 1, 0};  // kappa = -2 + 2 = 0 at tau = (1, 2, 4)
    const auto report = validate_setup(s);
    REQUIRE(report.issues.size() == 1);
    CHECK(report.issues[0].find("kappa") != std::string::npos);
  }
  SUBCASE("each structural defect is reported") {
    OperatorSetup s = gen_sphere_operator();
    s.tau.entries = {Rational(-1)};
    CHECK_FALSE(validate_setup(s).ok());

    s = gen_sphere_operator();
    s.tau.entries.push_back(1);
    CHECK_FALSE(validate_setup(s).ok());

    s = gen_sphere_operator();
    s.points[1].name = "NP";
    CHECK(validate_setup(s).issues.size() == 1);

    s = gen_sphere_operator();
    s.points[0].lines[0].grading = 0;
    CHECK(validate_setup(s).issues.size() == 1);

    s = gen_sphere_operator();
    s.points[0].lines[1].epsilon = {-1, -1};
    CHECK(validate_setup(s).issues.size() == 1);

    s = gen_sphere_operator();
    s.points[0].lines[1].epsilon = {0};
    CHECK(validate_setup(s).issues.size() == 1);

    s = gen_sphere_operator();
    s.points[0].lines[1].a = {1, 2};
    CHECK(validate_setup(s).issues.size() == 1);

    s = gen_sphere_operator();
    s.points[1].group_sign = 2;
    CHECK(validate_setup(s).issues.size() == 1);

    s = gen_sphere_operator();
    s.points[0].tangent_weights[0] = {};
    CHECK_FALSE(validate_setup(s).ok());
  }
  SUBCASE("require_valid carries the report") {
    OperatorSetup s = gen_sphere_operator();
    s.m = 2;
    try {
      require_valid(s);
      FAIL("expected InvalidSetup");
    } catch (const InvalidSetup& err) {
      CHECK_FALSE(err.issues().empty());
    }
  }
}

TEST_CASE("normalize_orientation") {
  const SlopeVector tau2{{1, 2, 4}};

  SUBCASE("CP^2 at [e_2] flips the plane toward e_1") {
    const auto out = normalize_orientation(raw_cpn_point(2, 2), tau2);
    CHECK(out.orientation_sign == -1);
    CHECK(out.tangent_weights[0] == WeightVector{-1, 1, 0});
    CHECK(out.tangent_weights[1] == WeightVector{0, -1, 1});
  }
  SUBCASE("CP^3 at [e_3] flips twice") {
    const auto out = normalize_orientation(raw_cpn_point(3, 3), SlopeVector{{1, 2, 4, 8}});
    CHECK(out.orientation_sign == 1);
    CHECK(out.tangent_weights[0] == WeightVector{-1, 0, 1, 0});
    CHECK(out.tangent_weights[1] == WeightVector{0, -1, 1, 0});
  }
  SUBCASE("already normalized data is untouched") {
    auto pt = raw_cpn_point(2, 1);
    pt.base_orientation = pt.orientation_sign = -1;
    CHECK(normalize_orientation(pt, tau2) == pt);
  }
  SUBCASE("idempotent") {
    for (int l = 1; l <= 4; ++l) {
      const auto once = normalize_orientation(raw_cpn_point(3, l), SlopeVector{{1, 2, 4, 8}});
      CHECK(normalize_orientation(once, SlopeVector{{1, 2, 4, 8}}) == once);
    }
  }
  SUBCASE("lines are not touched") {
    auto pt = raw_cpn_point(1, 2);
    pt.lines = {{{3, -1}, -1, {1}}};
    const auto out = normalize_orientation(pt, SlopeVector{{1, 2}});
    CHECK(out.lines == pt.lines);
    CHECK(out.orientation_sign == -1);
  }
  SUBCASE("degenerate weight") {
    FixedPointDatum pt;
    pt.tangent_weights = {{2, -1}};
    CHECK_THROWS_AS(normalize_orientation(pt, SlopeVector{{1, 2}}), DegenerateWeight);
  }
  SUBCASE("rank mismatch") {
    FixedPointDatum pt;
    pt.tangent_weights = {{2}};
    CHECK_THROWS_AS(normalize_orientation(pt, SlopeVector{{1, 2}}), RankMismatch);
  }
}

TEST_CASE("kappa") {
  const auto sphere = gen_sphere_operator();
  CHECK(kappa(sphere.points[0], sphere.tau) == std::vector<Rational>{2});
  const auto cp2 = gen_cpn(2);
  CHECK(kappa(cp2.points[0], cp2.tau) == std::vector<Rational>{1, 3});
  CHECK(kappa(FixedPointDatum{}, cp2.tau).empty());
  CHECK(kappa(cp2.points[0], SlopeVector{{Rational(1, 3), Rational(1, 2), 1}}) ==
        std::vector<Rational>{Rational(1, 6), Rational(2, 3)});
  CHECK_THROWS_AS(kappa(raw_cpn_point(2, 3), cp2.tau), NotNormalized);
}

TEST_CASE("weight vector arithmetic") {
  const WeightVector x{1, -2, 3}, y{0, 5, -3};
  CHECK(x + y == WeightVector{1, 3, 0});
  CHECK(x - y == WeightVector{1, -7, 6});
  CHECK(-2 * x == WeightVector{-2, 4, -6});
  CHECK(is_zero(WeightVector{0, 0}));
  CHECK_FALSE(is_zero(x));
  CHECK(is_zero(WeightVector{}));
}
