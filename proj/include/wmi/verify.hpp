#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wmi/matroid.hpp"
#include "wmi/solution.hpp"
#include "wmi/sssp.hpp"

namespace wmi {

inline constexpr std::size_t kBruteForceLimit = 24;

struct BruteForceResult {
  std::vector<Element> set;  // sorted
  std::int64_t weight = 0;
};

// Exhaustive maximum-weight common independent set. Ties go to the
// lexicographically smallest sorted id list. Throws std::length_error when the
// ground set exceeds kBruteForceLimit.
BruteForceResult brute_force_best(const Matroid& m1, const Matroid& m2,
                                  std::span<const std::int64_t> weight);

enum class EdgeKind : std::uint8_t { kSource, kE1, kE2, kTarget };

struct ExplicitEdge {
  Element tail;  // source() for kSource
  Element head;  // target() for kTarget
  EdgeKind kind;
  Integer weight;
};

// Every edge of the exchange graph, found by testing each candidate swap.
// Vertices are 0..n-1 plus source() = n and target() = n + 1.
struct ExplicitExchangeGraph {
  std::size_t n = 0;
  std::vector<ExplicitEdge> edges;
  std::vector<ExplicitEdge> negative_edges;

  Element source() const { return static_cast<Element>(n); }
  Element target() const { return static_cast<Element>(n + 1); }
};

// Throws std::invalid_argument if S1 == S2.
ExplicitExchangeGraph build_explicit_exchange_graph(const Problem& problem,
                                                    const PartialSolution& sol);

bool has_st_path(const ExplicitExchangeGraph& graph);

struct ReferencePaths {
  Integer hop_base = 1;
  std::vector<Integer> label;  // combined keys as in sssp, kUnreached if unreachable
  std::vector<Element> path;
  std::vector<EdgeSide> sides;
  Integer target_label = kUnreached;
};

// Plain Dijkstra on the explicit graph with the solver's combined key and its
// path rule: the target is the (label, id)-smallest element of S2 \ S1 and the
// walk back takes the smallest-id tight predecessor, E1 before E2.
// Throws InvariantViolation on negative edges or when t is unreachable.
ReferencePaths reference_shortest_paths(const ExplicitExchangeGraph& graph,
                                        const PartialSolution& sol);

// Compares labels and path. Labels beyond the stopping point of an early-stop
// run are ignored. Returns an empty string on agreement.
std::string compare_with_reference(const ShortestPathResult& fast, const ReferencePaths& slow);

struct AxiomReport {
  std::size_t checks = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Samples random sets and tests rank bounds, unit increments, monotonicity,
// submodularity, downward closure and the exchange property.
AxiomReport check_matroid_axioms(const Matroid& matroid, std::size_t samples, std::uint64_t seed);

// Negative control: a rank function that dips on large sets.
MatroidPtr make_broken_matroid(std::size_t n);

// Observer asserting the buffered-search invariants against exact labels:
// d(v) <= est(v) <= best edge into v from finalized, unbuffered tails, and
// some unfinalized v has est(v) equal to the next true distance.
class SsspInvariantChecker final : public SsspObserver {
 public:
  SsspInvariantChecker(const ExplicitExchangeGraph& graph, const PartialSolution& sol,
                       std::vector<Integer> exact_labels);
  void on_iteration(const SsspIterationView& view) override;
  const std::vector<std::string>& violations() const { return violations_; }
  std::size_t iterations_checked() const { return checked_; }

 private:
  const ExplicitExchangeGraph& graph_;
  const PartialSolution& sol_;
  std::vector<Integer> exact_;
  std::vector<std::string> violations_;
  std::size_t checked_ = 0;
};

}  // namespace wmi
