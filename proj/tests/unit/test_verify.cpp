#include "doctest.h"
#include "helpers.hpp"
#include "wmi/verify.hpp"

using namespace wmi;
using namespace wmi::testing;

TEST_CASE("brute force examples") {
  const MatchingInstance m;
  const auto best = brute_force_best(*m.m1, *m.m2, m.weight);
  CHECK(best.set == std::vector<Element>{1, 2});
  CHECK(best.weight == 9);

  const std::vector<std::int64_t> none;
  CHECK(brute_force_best(*uniform(0, 0), *uniform(0, 0), none).set.empty());

  const std::vector<std::int64_t> seven{7};
  const auto single = brute_force_best(*uniform(1, 1), *uniform(1, 1), seven);
  CHECK(single.set == std::vector<Element>{0});
  CHECK(single.weight == 7);

  // Ties go to the lexicographically smallest set.
  const std::vector<std::int64_t> tie{2, 2, 0};
  CHECK(brute_force_best(*uniform(3, 1), *uniform(3, 1), tie).set == std::vector<Element>{0});

  const std::vector<std::int64_t> big(25, 1);
  CHECK_THROWS_AS(brute_force_best(*uniform(25, 1), *uniform(25, 1), big), std::length_error);
}

TEST_CASE("explicit graph of the two-element instance") {
  TwoElementExample ex;
  const auto graph = build_explicit_exchange_graph(ex.problem, ex.sol);
  std::vector<Integer> weights;
  for (const auto& e : graph.edges) {
    if (e.kind == EdgeKind::kE1 || e.kind == EdgeKind::kE2) {
      CHECK(e.tail == 0);
      CHECK(e.head == 1);
      weights.push_back(e.weight);
    }
  }
  std::sort(weights.begin(), weights.end());
  CHECK(weights == wide({2, 3}));
  CHECK(graph.negative_edges.empty());
  CHECK(has_st_path(graph));

  const auto ref = reference_shortest_paths(graph, ex.sol);
  CHECK(label_distance(ref.label[1], ref.hop_base) == 2);
  CHECK(ref.path == std::vector<Element>{0, 1});
  CHECK(ref.sides == std::vector<EdgeSide>{EdgeSide::kE2});

  ex.sol.s2 = ex.sol.s1;
  CHECK_THROWS_AS(build_explicit_exchange_graph(ex.problem, ex.sol), std::invalid_argument);
}

TEST_CASE("explicit graph of uniform(3,1)") {
  Problem p;
  p.m1 = uniform(3, 1);
  p.m2 = uniform(3, 1);
  p.weight = wide({0, 0, 0});
  p.rank = 1;
  PartialSolution sol;
  sol.split.w1 = wide({0, 0, 0});
  sol.split.w2 = wide({0, 0, 0});
  sol.s1 = ElementSet(3, std::vector<Element>{a});
  sol.s2 = ElementSet(3, std::vector<Element>{b});
  const auto graph = build_explicit_exchange_graph(p, sol);
  std::vector<std::pair<Element, Element>> e1, e2;
  for (const auto& e : graph.edges) {
    if (e.kind == EdgeKind::kE1) e1.emplace_back(e.tail, e.head);
    if (e.kind == EdgeKind::kE2) e2.emplace_back(e.tail, e.head);
  }
  CHECK(e1 == std::vector<std::pair<Element, Element>>{{a, b}, {a, c}});
  // Swapping b out of S2 for either a or c stays independent.
  CHECK(e2 == std::vector<std::pair<Element, Element>>{{a, b}, {c, b}});

  const auto ref = reference_shortest_paths(graph, sol);
  CHECK(ref.path == std::vector<Element>{a, b});
  CHECK(label_hops(ref.label[b], ref.hop_base) == 1);
}

TEST_CASE("negative edges are reported") {
  TwoElementExample ex;
  ex.sol.split.w1 = wide({1, 4});
  const auto graph = build_explicit_exchange_graph(ex.problem, ex.sol);
  CHECK(graph.negative_edges.size() == 1);
  CHECK_THROWS_AS(reference_shortest_paths(graph, ex.sol), InvariantViolation);
}

TEST_CASE("every harvested partial solution admits an st-path") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto inst = generate_instance({"gf2-partition", 18, 6, 30, seed, false});
    for (const auto& state : harvest_partial_solutions(inst, 1))
      CHECK(has_st_path(build_explicit_exchange_graph(state.problem, state.sol)));
  }
}

TEST_CASE("matroid axioms") {
  CHECK(check_matroid_axioms(*uniform(6, 3), 1000, 1).ok());
  const auto graph = generate_instance({"graphic-graphic", 18, 9, 1, 3, false});
  CHECK(check_matroid_axioms(*graph.m1, 1000, 2).ok());
  const auto broken = check_matroid_axioms(*make_broken_matroid(6), 1000, 3);
  CHECK_FALSE(broken.ok());
  CHECK(check_matroid_axioms(*uniform(0, 0), 10, 4).ok());
}
