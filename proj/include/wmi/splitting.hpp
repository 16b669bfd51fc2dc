#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wmi/solution.hpp"

namespace wmi {

// Smallest power of two >= max weight, never below 2 so that halving stays
// integral.
Integer initial_epsilon(std::span<const Integer> weight);

// Constant split w1 = w2 = eps0 / 2 around a common basis. Constant weights
// make every basis maximum, so this is an eps0-solution.
PartialSolution initial_solution(const Problem& problem, std::span<const Element> common_basis,
                                 int scale_exp = 0);

struct AdjustOptions {
  bool random_order = false;  // pick eligible elements uniformly instead of FIFO
  std::uint64_t seed = 0;
  int debug_level = 0;  // 2: re-verify maximality with greedy after each step on small inputs
  QueryStats* stats = nullptr;
};

struct AdjustmentReport {
  int k = 0;
  Integer epsilon = 0;
  std::size_t steps = 0;
  std::size_t swaps = 0;
  std::size_t remaining_difference = 0;  // |S1 \ S2| at exit
  std::size_t difference_bound = 0;      // ceil(2r / k)
  std::vector<int> p;                    // per-element increase counter
  std::vector<int> adjustments;          // per-element weight adjustments
};

struct AdjustmentResult {
  PartialSolution solution;
  AdjustmentReport report;
};

// Turns a 2eps-solution into an eps-partial-solution whose bases differ in at
// most ceil(2r / k) elements. Throws InvariantViolation if a bound breaks.
AdjustmentResult adjust_weights(const Problem& problem, const PartialSolution& coarse, int k,
                                const AdjustOptions& options = {});

}  // namespace wmi
