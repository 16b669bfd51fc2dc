#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "wmi/solution.hpp"

namespace wmi {

// Distance labels are combined keys distance * hop_base + hops, so that the
// integer order is (distance, hops) lexicographic. hop_base = n + 1.
inline constexpr Integer kUnreached = kIntegerMax;

inline Integer label_distance(Integer combined, Integer hop_base) { return combined / hop_base; }
inline Integer label_hops(Integer combined, Integer hop_base) { return combined % hop_base; }

// Side of an exchange-graph edge: E1 edges x -> y swap x in S1 for y outside
// S1; E2 edges y -> x swap x in S2 for y outside S2.
enum class EdgeSide : std::uint8_t { kE1 = 1, kE2 = 2 };

struct SsspStats {
  std::size_t iterations = 0;
  std::array<std::size_t, 2> case1_fires{0, 0};
  std::array<std::size_t, 2> case2_finder_calls{0, 0};
  std::array<std::size_t, 2> case1_finder_calls{0, 0};
  std::size_t trace_finder_calls = 0;
};

struct ShortestPathResult {
  Integer hop_base = 1;
  // Combined label per element; kUnreached if not finalized (unreachable,
  // or beyond the stopping point when the search stops early).
  std::vector<Integer> label;
  bool full_tree = false;
  // v1 .. vk, starting in S1 \ S2 and ending in S2 \ S1.
  std::vector<Element> path;
  // sides[i] is the side of edge (path[i], path[i + 1]).
  std::vector<EdgeSide> sides;
  // Combined label of t: label(vk) + 1 (one extra hop on the E_t edge).
  Integer target_label = kUnreached;
  SsspStats stats;

  bool reached(Element x) const { return label[x] != kUnreached; }
  Integer distance(Element x) const { return label_distance(label[x], hop_base); }
  Integer target_distance() const { return label_distance(target_label, hop_base); }
};

// Read-only view handed to observers after each iteration.
struct SsspIterationView {
  std::size_t iteration;
  Element popped;
  std::span<const Integer> label;      // finalized labels, kUnreached otherwise
  std::span<const Integer> estimate;   // current estimates, kUnreached = infinity
  std::span<const char> finalized;
  std::span<const Element> buffer1;
  std::span<const Element> buffer2;
  std::array<bool, 2> case1_fired;
  Integer hop_base;
  bool last;  // the search stops after this iteration
};

class SsspObserver {
 public:
  virtual ~SsspObserver() = default;
  virtual void on_iteration(const SsspIterationView& view) = 0;
};

enum class StopRule {
  kFullTree,     // run until the queue is exhausted; every reachable label exact
  kFirstTarget,  // stop once the nearest element of S2 \ S1 is finalized
};

struct SsspOptions {
  StopRule stop = StopRule::kFullTree;
  int buffer_threshold = 0;  // 0 selects max(1, ceil(sqrt(r)))
  SsspObserver* observer = nullptr;
  std::ostream* trace = nullptr;  // newline-delimited JSON, one record per iteration
};

int default_buffer_threshold(int rank);

// Shortest st-path with the fewest edges in the implicit exchange graph of
// `sol`, using buffered Dijkstra with binary-search edge discovery. Ties
// between equally short paths resolve to the smallest predecessor id while
// tracing back from t. Requires S1 != S2.
ShortestPathResult shortest_path_tree(const Problem& problem, const PartialSolution& sol,
                                      const SsspOptions& options = {});

// One exchange-finder call per target: for side 1 every v in `targets`
// (outside S1) gets min over b in `buffer` of label(b) + hop_base*(w1(b) - w1(v)) + 1;
// for side 2 every v (in S2) gets min of label(b) + hop_base*(w2(v) - w2(b)) + 1.
// Returns the relaxed value per target (kUnreached when no edge exists).
std::vector<Integer> batch_relax(const Problem& problem, const PartialSolution& sol, int side,
                                 std::span<const Element> buffer, std::span<const Integer> label,
                                 std::span<const Element> targets);

}  // namespace wmi
