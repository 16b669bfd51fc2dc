#pragma once

#include <algorithm>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "wmi/families.hpp"
#include "wmi/instance.hpp"
#include "wmi/solution.hpp"
#include "wmi/solver.hpp"
#include "wmi/transforms.hpp"

namespace wmi::testing {

// Letters for the small hand examples.
inline constexpr Element a = 0, b = 1, c = 2, d = 3;

inline MatroidPtr uniform(std::size_t n, int k) { return std::make_shared<UniformMatroid>(n, k); }

inline MatroidPtr partition(std::vector<std::vector<Element>> blocks, std::vector<int> caps) {
  return std::make_shared<PartitionMatroid>(std::move(blocks), std::move(caps));
}

inline MatroidPtr graphic(int vertices, std::vector<std::pair<int, int>> edges) {
  return std::make_shared<GraphicMatroid>(vertices, std::move(edges));
}

inline MatroidPtr triangle() { return graphic(3, {{0, 1}, {1, 2}, {0, 2}}); }

// e1 = (1,A), e2 = (1,B), e3 = (2,A) with weights (3, 5, 4).
struct MatchingInstance {
  MatroidPtr m1 = partition({{0, 1}, {2}}, {1, 1});
  MatroidPtr m2 = partition({{0, 2}, {1}}, {1, 1});
  std::vector<std::int64_t> weight{3, 5, 4};
};

inline std::vector<Integer> wide(std::initializer_list<long long> values) {
  return std::vector<Integer>(values.begin(), values.end());
}

// Two-element exchange graph example: M1 = M2 = uniform(2, 1), w1 = (4, 1),
// w2 = (0, 2), S1 = {x}, S2 = {y}.
struct TwoElementExample {
  Problem problem;
  PartialSolution sol;
  TwoElementExample() {
    problem.m1 = uniform(2, 1);
    problem.m2 = uniform(2, 1);
    problem.weight = wide({4, 3});
    problem.rank = 1;
    sol.split.w1 = wide({4, 1});
    sol.split.w2 = wide({0, 2});
    sol.split.epsilon = 1;
    sol.s1 = ElementSet(2, std::vector<Element>{0});
    sol.s2 = ElementSet(2, std::vector<Element>{1});
  }
};

// Problems and epsilon-partial-solutions with S1 != S2, harvested from the
// solver right after each weight adjustment of a run with small k.
struct HarvestedState {
  Problem problem;
  PartialSolution sol;
};

inline std::vector<HarvestedState> harvest_partial_solutions(const Instance& inst, int k) {
  std::vector<HarvestedState> out;
  SolveConfig config;
  config.k_override = k;
  config.on_adjust = [&out](const Problem& problem, const PartialSolution&,
                            const AdjustmentResult& adjusted) {
    if (!adjusted.solution.is_solution()) out.push_back({problem, adjusted.solution});
  };
  solve(inst.m1, inst.m2, inst.weights, config);
  return out;
}

}  // namespace wmi::testing
