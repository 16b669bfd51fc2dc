#include "doctest.h"
#include "helpers.hpp"
#include "wmi/verify.hpp"

using namespace wmi;
using namespace wmi::testing;

namespace {

void check_cover(const Matroid& m1, const Matroid& m2, const MaxCardinalityResult& result) {
  std::vector<char> in_cover(m1.ground_size(), 0);
  for (Element e : result.cover) in_cover[e] = 1;
  std::vector<Element> rest;
  for (std::size_t i = 0; i < m1.ground_size(); ++i)
    if (!in_cover[i]) rest.push_back(static_cast<Element>(i));
  CHECK(m1.rank(rest) + m2.rank(result.cover) == result.rank);
  CHECK(m1.is_independent(result.basis));
  CHECK(m2.is_independent(result.basis));
}

}  // namespace

TEST_CASE("ceil_power") {
  CHECK(ceil_power(16, {3, 4}) == 8);
  CHECK(ceil_power(17, {3, 4}) == 9);
  CHECK(ceil_power(1, {3, 4}) == 1);
  CHECK(ceil_power(0, {1, 2}) == 1);
  CHECK(ceil_power(10, {1, 2}) == 4);
  CHECK(ceil_power(9, {1, 1}) == 9);
}

TEST_CASE("maximum cardinality intersection") {
  const MatchingInstance m;
  const auto matching = max_cardinality_intersection(*m.m1, *m.m2);
  CHECK(matching.rank == 2);
  check_cover(*m.m1, *m.m2, matching);

  const auto tri = triangle();
  const auto same = max_cardinality_intersection(*tri, *tri);
  CHECK(same.rank == 2);
  check_cover(*tri, *tri, same);

  const auto blocked = max_cardinality_intersection(*partition({{0, 1}, {2}}, {0, 1}),
                                                    *partition({{0, 1, 2}}, {0}));
  CHECK(blocked.rank == 0);
  CHECK(blocked.basis.empty());
}

TEST_CASE("maximum cardinality agrees with brute force") {
  for (const auto& family : generator_families()) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto inst = generate_instance({family, 12, 5, 1, seed, false});
      const std::vector<std::int64_t> ones(inst.size(), 1);
      const auto result = max_cardinality_intersection(*inst.m1, *inst.m2);
      CHECK(result.rank == brute_force_best(*inst.m1, *inst.m2, ones).weight);
      check_cover(*inst.m1, *inst.m2, result);
    }
  }
}

TEST_CASE("weighted matching instance") {
  const MatchingInstance m;
  const auto result = solve(m.m1, m.m2, m.weight);
  CHECK(result.solution == std::vector<Element>{1, 2});
  CHECK(result.weight == 9);
  CHECK(result.report.certified);
  CHECK(result.report.rank == 2);
  CHECK(result.report.scale_exp == 3);
}

TEST_CASE("equal weights reduce to cardinality") {
  const auto inst = generate_instance({"graphic-partition", 20, 6, 0, 4, false});
  const std::vector<std::int64_t> flat(inst.size(), 7);
  const auto result = solve(inst.m1, inst.m2, flat);
  CHECK(result.weight == 7 * result.report.rank);
  CHECK(result.report.rank == max_cardinality_intersection(*inst.m1, *inst.m2).rank);
}

TEST_CASE("graphic-partition n=14 seed 11 equals brute force") {
  const auto inst = generate_instance({"graphic-partition", 14, 5, 30, 11, false});
  const auto result = solve(inst.m1, inst.m2, inst.weights);
  const auto best = brute_force_best(*inst.m1, *inst.m2, inst.weights);
  CHECK(result.weight == best.weight);
}

TEST_CASE("degenerate inputs") {
  const std::vector<std::int64_t> none;
  const auto empty = solve(uniform(0, 0), uniform(0, 0), none);
  CHECK(empty.solution.empty());
  CHECK(empty.weight == 0);

  const std::vector<std::int64_t> negative{-5};
  const auto neg = solve(uniform(1, 1), uniform(1, 1), negative);
  CHECK(neg.solution.empty());
  CHECK(neg.weight == 0);

  const std::vector<std::int64_t> all_negative{-1, -2, -3};
  CHECK(solve(uniform(3, 2), uniform(3, 2), all_negative).solution.empty());

  const std::vector<std::int64_t> mixed{4, -2, 0, 6};
  const auto result = solve(uniform(4, 4), uniform(4, 4), mixed);
  CHECK(result.weight == 10);
  CHECK(std::find(result.solution.begin(), result.solution.end(), 1) == result.solution.end());
}

TEST_CASE("weights must match the ground set") {
  const std::vector<std::int64_t> w{1, 2};
  CHECK_THROWS_AS(solve(uniform(3, 1), uniform(3, 1), w), InstanceError);
}

TEST_CASE("refinement schedule and forced k = 1") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = generate_instance({"uniform-graphic", 20, 7, 100, seed, true});
    const auto base = solve(inst.m1, inst.m2, inst.weights);
    int log_eps0 = 0;
    while ((Integer{1} << log_eps0) < base.report.epsilon0) ++log_eps0;
    CHECK(base.report.rounds == static_cast<std::size_t>(log_eps0));

    SolveConfig config;
    config.k_override = 1;
    const auto forced = solve(inst.m1, inst.m2, inst.weights, config);
    CHECK(forced.weight == base.weight);
    for (const auto& round : forced.report.round_reports) {
      CHECK(round.augmentations <= round.difference_bound);
      CHECK(round.difference_bound <= static_cast<std::size_t>(2 * forced.report.rank));
    }
  }
}

TEST_CASE("late rounds of the matching instance need no augmentation") {
  const MatchingInstance m;
  const auto result = solve(m.m1, m.m2, m.weight);
  std::size_t total = 0;
  for (const auto& round : result.report.round_reports) {
    CHECK(round.augmentations <= round.difference_bound);
    total += round.augmentations;
  }
  CHECK(total == result.report.augmentations);
  REQUIRE(result.report.round_reports.size() == 6);
  for (std::size_t i = 2; i < 6; ++i) {
    CHECK(result.report.round_reports[i].difference_after_adjust == 0);
    CHECK(result.report.round_reports[i].augmentations == 0);
  }
}

TEST_CASE("certificates accept solves and reject tampering") {
  const MatchingInstance m;
  const auto result = solve(m.m1, m.m2, m.weight);
  CHECK(certify_optimality(result.certificate, m.m1, m.m2, m.weight).ok);

  auto bumped = result.certificate;
  bumped.w1[0] += 3;
  CHECK_FALSE(certify_optimality(bumped, m.m1, m.m2, m.weight).ok);

  auto lowered = result.certificate;
  lowered.w2[1] -= 2;
  CHECK_FALSE(certify_optimality(lowered, m.m1, m.m2, m.weight).ok);

  // {e1, z0}: a common basis of the padded matroids that is not optimal.
  auto suboptimal = result.certificate;
  suboptimal.basis = {0, 3};
  const auto verdict = certify_optimality(suboptimal, m.m1, m.m2, m.weight);
  CHECK_FALSE(verdict.ok);
  CHECK((verdict.reason == CertifyFailure::kNotMaximum1 ||
         verdict.reason == CertifyFailure::kNotMaximum2));

  auto not_common = result.certificate;
  not_common.basis = {0, 2};
  CHECK(certify_optimality(not_common, m.m1, m.m2, m.weight).reason ==
        CertifyFailure::kBasisNotCommon);

  auto bad_cover = result.certificate;
  bad_cover.cover = {0};
  CHECK(certify_optimality(bad_cover, m.m1, m.m2, m.weight).reason == CertifyFailure::kCover);

  auto coarse = result.certificate;
  coarse.epsilon = 8;
  CHECK(certify_optimality(coarse, m.m1, m.m2, m.weight).reason == CertifyFailure::kMalformed);

  auto shifted = result.certificate;
  shifted.kept = {0, 1};
  CHECK(certify_optimality(shifted, m.m1, m.m2, m.weight).reason == CertifyFailure::kMalformed);

  auto short_rank = result.certificate;
  short_rank.rank = 1;
  CHECK_FALSE(certify_optimality(short_rank, m.m1, m.m2, m.weight).ok);
}

TEST_CASE("run report serializes") {
  const MatchingInstance m;
  const auto report = solve(m.m1, m.m2, m.weight).report.to_json();
  CHECK(report["r"] == 2);
  CHECK(report["queries"].contains("sssp"));
  CHECK(report["queries_total"].get<std::uint64_t>() >=
        report["queries_excluding_init"].get<std::uint64_t>());
  CHECK(report["init_uses_simple_augmenting_paths"] == true);
}
