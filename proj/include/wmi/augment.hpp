#pragma once

#include <cstdint>
#include <vector>

#include "wmi/solution.hpp"
#include "wmi/sssp.hpp"

namespace wmi {

struct AugmentationRecord {
  std::vector<Element> path;
  std::vector<EdgeSide> sides;
  std::size_t intersection_before = 0;
  std::size_t intersection_after = 0;
  Integer shift_cap = 0;  // distance of t; every weight shift is clamped to it
};

class AugmentationFailure : public InvariantViolation {
 public:
  AugmentationFailure(const std::string& what, AugmentationRecord record)
      : InvariantViolation(what), record_(std::move(record)) {}
  const AugmentationRecord& record() const { return record_; }

 private:
  AugmentationRecord record_;
};

// Swaps both bases along the path and shifts the split by the distance
// labels: w1 += d, w2 -= d, where d(x) = min(dist(x), dist(t)) and elements not
// reached get dist(t). The clamp keeps the labels a feasible potential, so both
// bases stay maximum, while bounding how far the weights move.
PartialSolution apply_augmentation(const Problem& problem, const PartialSolution& sol,
                                   const ShortestPathResult& path,
                                   AugmentationRecord* record = nullptr);

struct AugmentCheckOptions {
  int debug_level = 1;               // 0: none, 1: cheap checks, 2: maximality too
  std::size_t exhaustive_limit = 200;  // greedy maximality check up to this size
  std::size_t samples = 256;           // sampled local exchanges above it
  std::uint64_t seed = 0;
};

// Post-conditions of one augmentation: strict intersection growth, w1 + w2
// unchanged pointwise, both new bases independent and (level 2) maximum.
// Throws AugmentationFailure.
void check_augmentation(const Problem& problem, const PartialSolution& before,
                        const PartialSolution& after, const AugmentationRecord& record,
                        const AugmentCheckOptions& options);

// True if `basis` has the largest f-weight among bases of `matroid`
// (greedy comparison).
bool is_maximum_basis(const Matroid& matroid, const ElementSet& basis,
                      std::span<const Integer> f);

}  // namespace wmi
