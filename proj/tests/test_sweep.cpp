#include "doctest.h"

#include "tvindex/errors.hpp"
#include "tvindex/generators.hpp"
#include "tvindex/sweep.hpp"

using namespace tvi;

TEST_CASE("box_vectors") {
  const auto all = box_vectors(2, 1, true);
  REQUIRE(all.size() == 9);
  CHECK(all.front() == WeightVector{-1, -1});
  CHECK(all[1] == WeightVector{-1, 0});
  CHECK(all.back() == WeightVector{1, 1});
  CHECK(std::is_sorted(all.begin(), all.end()));
  CHECK(box_vectors(2, 1).size() == 8);
  CHECK(box_vectors(3, 2).size() == 124);
  CHECK(box_vectors(1, 0, true) == std::vector<WeightVector>{{0}});
  CHECK(box_vectors(1, 0).empty());
}

TEST_CASE("nonzero_entries") {
  const std::vector<WeightVector> bs{{1}, {2}, {3}};
  const std::vector<Integer> values{0, -4, 0};
  CHECK(nonzero_entries(bs, values) == std::vector<SweepFailure>{{{2}, -4}});
}

TEST_CASE("parallel sweeps match the serial reference") {
  const auto de_rham = gen_cpn(3);
  const auto sig = gen_cpn(3, std::nullopt, OperatorKind::signature);
  const PreparedSetup pd(de_rham), ps(sig);
  const auto bs = box_vectors(4, 3, true);
  const auto admissible = admissible_vectors(ps, 4);

  const auto ref_index = serial::index_values(pd, bs);
  const auto ref_sig_index = serial::index_values(ps, bs);
  const auto ref_sums = serial::signature_sums(ps, admissible);
  for (int threads : {1, 2, 3, 8}) {
    CAPTURE(threads);
    set_thread_limit(threads);
    CHECK(parallel::index_values(pd, bs) == ref_index);
    CHECK(parallel::index_values(ps, bs) == ref_sig_index);
    CHECK(parallel::signature_sums(ps, admissible) == ref_sums);
  }
  set_thread_limit(0);
  CHECK(max_threads() >= 1);

  // The reference itself: b = 0 gives the Euler characteristic, the rest vanish.
  for (std::size_t i = 0; i < bs.size(); ++i) CHECK(ref_index[i] == (is_zero(bs[i]) ? 4 : 0));
  for (auto v : ref_sums) CHECK(v == 0);
}

TEST_CASE("parallel sweeps propagate errors") {
  const PreparedSetup prepared(gen_cpn(2));
  std::vector<WeightVector> bs = box_vectors(3, 1);
  bs[5] = {1, 1};
  set_thread_limit(2);
  CHECK_THROWS_AS(parallel::index_values(prepared, bs), RankMismatch);
  CHECK_THROWS_AS(parallel::signature_sums(prepared, bs), RankMismatch);
  set_thread_limit(0);
  CHECK_THROWS_AS(serial::index_values(prepared, bs), RankMismatch);
}

TEST_CASE("admissible_vectors") {
  const PreparedSetup sphere(gen_sphere_operator());
  // NP cone: -b in 2 N, SP cone (reversed): b in 2 N.
  CHECK(admissible_vectors(sphere, 5) == std::vector<WeightVector>{{-4}, {-2}, {2}, {4}});

  // A point whose weights are dependent takes the full-box path.
  OperatorSetup s;
  s.m = 2;
  s.tau.entries = {1, 3};
  FixedPointDatum pt;
  pt.name = "x";
  pt.tangent_weights = {{1, 0}, {2, 0}, {0, 1}};
  s.points = {pt};
  const auto got = admissible_vectors(PreparedSetup(s), 2);
  std::vector<WeightVector> want;
  for (const auto& b : box_vectors(2, 2)) {
    if (b[0] <= 0 && b[1] <= 0) want.push_back(b);
  }
  CHECK(got == want);
}
