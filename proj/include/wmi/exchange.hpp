#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wmi/matroid.hpp"
#include "wmi/ordered_pool.hpp"

namespace wmi {

// First b in pool order with (S \ {b}) ∪ {x} independent, where the pool is a
// subset of S and x is not in S. Binary search on prefixes P_j of the pool:
// rank((S ∪ {x}) \ P_j) = |S| + 1 - j holds iff P_j meets the circuit of
// S ∪ {x}. Uses at most ceil(log2 |pool|) + 1 rank queries.
std::optional<Element> find_removal_exchange(const Matroid& matroid, std::span<const Element> s,
                                             Element x, const OrderedPool& pool);

// First b in pool order with (S \ {x}) ∪ {b} independent, where the pool is
// disjoint from S and x is in S. Predicate: rank((S \ {x}) ∪ P_j) >= |S|.
// Uses at most ceil(log2 |pool|) + 1 rank queries.
std::optional<Element> find_insertion_exchange(const Matroid& matroid, std::span<const Element> s,
                                               Element x, const OrderedPool& pool);

// Greedy f-maximum basis: scans elements by descending f (ascending id on
// ties) and keeps each one that stays independent. One query per element.
std::vector<Element> greedy_max_basis(const Matroid& matroid, std::span<const Integer> f);

Integer total_weight(std::span<const Integer> f, std::span<const Element> set);

}  // namespace wmi
