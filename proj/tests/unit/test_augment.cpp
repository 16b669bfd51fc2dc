#include "doctest.h"
#include "helpers.hpp"
#include "wmi/augment.hpp"
#include "wmi/sssp.hpp"
#include "wmi/verify.hpp"

using namespace wmi;
using namespace wmi::testing;

TEST_CASE("two-element augmentation") {
  TwoElementExample ex;
  const auto path = shortest_path_tree(ex.problem, ex.sol);
  AugmentationRecord record;
  const auto next = apply_augmentation(ex.problem, ex.sol, path, &record);
  CHECK(next.s1.sorted() == std::vector<Element>{0});
  CHECK(next.s2.sorted() == std::vector<Element>{0});
  CHECK(next.split.w1 == wide({4, 3}));
  CHECK(next.split.w2 == wide({0, 0}));
  CHECK(is_maximum_basis(*ex.problem.m1, next.s1, next.split.w1));
  CHECK(is_maximum_basis(*ex.problem.m2, next.s2, next.split.w2));
  CHECK(record.intersection_before == 0);
  CHECK(record.intersection_after == 1);
  AugmentCheckOptions options;
  options.debug_level = 2;
  CHECK_NOTHROW(check_augmentation(ex.problem, ex.sol, next, record, options));
}

TEST_CASE("a path without E1 edges leaves S1 alone") {
  TwoElementExample ex;
  const auto path = shortest_path_tree(ex.problem, ex.sol);
  REQUIRE(std::count(path.sides.begin(), path.sides.end(), EdgeSide::kE1) == 0);
  CHECK(apply_augmentation(ex.problem, ex.sol, path).s1 == ex.sol.s1);
}

TEST_CASE("check_augmentation catches a broken split") {
  TwoElementExample ex;
  const auto path = shortest_path_tree(ex.problem, ex.sol);
  AugmentationRecord record;
  auto next = apply_augmentation(ex.problem, ex.sol, path, &record);
  next.split.w1[1] += 1;
  CHECK_THROWS_AS(check_augmentation(ex.problem, ex.sol, next, record, {}), AugmentationFailure);
}

TEST_CASE("random n=30 augmentations grow the intersection") {
  std::size_t runs = 0, single = 0;
  AugmentCheckOptions options;
  options.debug_level = 2;
  for (std::uint64_t seed = 3; runs < 200 && seed < 400; ++seed) {
    const auto inst = generate_instance({"graphic-partition", 30, 10, 64, seed, false});
    for (const auto& state : harvest_partial_solutions(inst, 1)) {
      if (runs == 200) break;
      const auto path = shortest_path_tree(state.problem, state.sol);
      AugmentationRecord record;
      const auto next = apply_augmentation(state.problem, state.sol, path, &record);
      CHECK(record.intersection_after > record.intersection_before);
      CHECK_NOTHROW(check_augmentation(state.problem, state.sol, next, record, options));
      single += record.intersection_after == record.intersection_before + 1;
      ++runs;
    }
  }
  CHECK(runs == 200);
  MESSAGE(single << " of " << runs << " augmentations grew the intersection by exactly one");
}
