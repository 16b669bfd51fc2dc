#include "wmi/augment.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "wmi/exchange.hpp"

namespace wmi {

PartialSolution apply_augmentation(const Problem& problem, const PartialSolution& sol,
                                   const ShortestPathResult& path, AugmentationRecord* record) {
  const std::size_t n = problem.size();
  if (path.path.size() < 2 || path.sides.size() + 1 != path.path.size())
    throw std::invalid_argument("apply_augmentation needs a path with at least one edge");

  PartialSolution next = sol;
  for (std::size_t i = 0; i + 1 < path.path.size(); ++i) {
    const Element tail = path.path[i];
    const Element head = path.path[i + 1];
    if (path.sides[i] == EdgeSide::kE1) {
      next.s1.erase(tail);
      next.s1.insert(head);
    } else {
      next.s2.erase(head);
      next.s2.insert(tail);
    }
  }

  const Integer cap = path.target_distance();
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = static_cast<Element>(i);
    const Integer shift = path.reached(x) ? std::min(path.distance(x), cap) : cap;
    next.split.w1[x] = checked_add(next.split.w1[x], shift);
    next.split.w2[x] = checked_sub(next.split.w2[x], shift);
  }

  if (record != nullptr) {
    record->path = path.path;
    record->sides = path.sides;
    record->intersection_before = intersection_size(sol.s1, sol.s2);
    record->intersection_after = intersection_size(next.s1, next.s2);
    record->shift_cap = cap;
  }
  return next;
}

bool is_maximum_basis(const Matroid& matroid, const ElementSet& basis,
                      std::span<const Integer> f) {
  if (!matroid.is_independent(basis.elements())) return false;
  const auto best = greedy_max_basis(matroid, f);
  return best.size() == basis.size() && total_weight(f, best) == total_weight(f, basis.elements());
}

namespace {

// Sampled local optimality: for random x in the basis and y outside, a valid
// swap must not increase the weight.
bool sampled_local_maximum(const Matroid& matroid, const ElementSet& basis,
                           std::span<const Integer> f, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = matroid.ground_size();
  if (basis.empty() || basis.size() == n) return true;
  std::vector<Element> outside;
  for (std::size_t i = 0; i < n; ++i)
    if (!basis.contains(static_cast<Element>(i))) outside.push_back(static_cast<Element>(i));
  std::mt19937_64 rng(seed);
  std::vector<Element> members(basis.elements().begin(), basis.elements().end());
  std::vector<Element> probe;
  for (std::size_t s = 0; s < samples; ++s) {
    const Element x = members[rng() % members.size()];
    const Element y = outside[rng() % outside.size()];
    if (f[x] >= f[y]) continue;
    probe = members;
    std::replace(probe.begin(), probe.end(), x, y);
    if (matroid.is_independent(probe)) return false;
  }
  return true;
}

}  // namespace

void check_augmentation(const Problem& problem, const PartialSolution& before,
                        const PartialSolution& after, const AugmentationRecord& record,
                        const AugmentCheckOptions& options) {
  if (options.debug_level <= 0) return;
  auto fail = [&](const std::string& what) { throw AugmentationFailure(what, record); };

  if (record.intersection_after <= record.intersection_before)
    fail("augmentation did not grow |S1 ∩ S2| (" + std::to_string(record.intersection_before) +
         " -> " + std::to_string(record.intersection_after) + ")");
  for (std::size_t x = 0; x < problem.size(); ++x) {
    if (after.split.w1[x] + after.split.w2[x] != before.split.w1[x] + before.split.w2[x])
      fail("augmentation changed w1 + w2 at element " + std::to_string(x));
  }
  if (after.s1.size() != before.s1.size() || after.s2.size() != before.s2.size())
    fail("augmentation changed a basis size");
  if (!problem.m1->is_independent(after.s1.elements())) fail("augmented S1 is dependent");
  if (!problem.m2->is_independent(after.s2.elements())) fail("augmented S2 is dependent");

  if (options.debug_level < 2) return;
  for (int side = 1; side <= 2; ++side) {
    const auto& w = side == 1 ? after.split.w1 : after.split.w2;
    const auto& s = side == 1 ? after.s1 : after.s2;
    const bool ok = problem.size() <= options.exhaustive_limit
                        ? is_maximum_basis(problem.matroid(side), s, w)
                        : sampled_local_maximum(problem.matroid(side), s, w, options.samples,
                                                options.seed + static_cast<std::uint64_t>(side));
    if (!ok) fail("augmented S" + std::to_string(side) + " is not maximum");
  }
}

}  // namespace wmi
