#include "wmi/sssp.hpp"

#include <cmath>
#include <ostream>
#include <set>
#include <string>

#include "wmi/exchange.hpp"
#include "wmi/ordered_pool.hpp"

namespace wmi {

int default_buffer_threshold(int rank) {
  if (rank <= 1) return 1;
  auto root = static_cast<int>(std::sqrt(static_cast<double>(rank)));
  while (root * root < rank) ++root;
  while (root > 1 && (root - 1) * (root - 1) >= rank) --root;
  return root;
}

namespace {

Integer relaxed(Integer tail_label, Integer edge_weight, Integer hop_base) {
  if (edge_weight < 0)
    throw InvariantViolation("negative exchange-graph edge weight " + to_string(edge_weight) +
                             ": a basis is not maximum for its weights");
  return checked_add(checked_add(tail_label, checked_mul(edge_weight, hop_base)), 1);
}

std::string json_integer(Integer v) {
  if (v == kUnreached) return "null";
  return to_string(v);
}

class BufferedDijkstra {
 public:
  BufferedDijkstra(const Problem& problem, const PartialSolution& sol, const SsspOptions& options)
      : problem_(problem),
        sol_(sol),
        options_(options),
        n_(problem.size()),
        hop_base_(static_cast<Integer>(n_) + 1),
        label_(n_, kUnreached),
        estimate_(n_, kUnreached),
        finalized_(n_, 0),
        unvisited_out1_(n_),
        unvisited_in2_(n_),
        buffer_pool1_(n_),
        buffer_pool2_(n_),
        head_{std::vector<Element>(n_, kNoTarget), std::vector<Element>(n_, kNoTarget)} {
    threshold_ = options.buffer_threshold > 0 ? static_cast<std::size_t>(options.buffer_threshold)
                                              : static_cast<std::size_t>(
                                                    default_buffer_threshold(problem.rank));
  }

  ShortestPathResult run() {
    if (sol_.s1 == sol_.s2)
      throw std::invalid_argument("shortest_path_tree requires S1 != S2");
    const auto& w1 = sol_.split.w1;
    const auto& w2 = sol_.split.w2;
    for (std::size_t i = 0; i < n_; ++i) {
      const auto x = static_cast<Element>(i);
      if (!sol_.s1.contains(x)) unvisited_out1_.insert(x, priority_key(w1[x], Objective::kMax));
      if (sol_.s2.contains(x)) unvisited_in2_.insert(x, priority_key(w2[x], Objective::kMin));
      if (sol_.s1.contains(x) && !sol_.s2.contains(x)) decrease(x, 0);
    }

    ShortestPathResult result;
    result.hop_base = hop_base_;
    result.full_tree = options_.stop == StopRule::kFullTree;
    Element nearest_target = -1;

    while (!queue_.empty()) {
      const auto [key, v] = *queue_.begin();
      queue_.erase(queue_.begin());
      finalize(v, key);
      ++stats_.iterations;

      const bool is_target = sol_.s2.contains(v) && !sol_.s1.contains(v);
      if (is_target && nearest_target < 0) nearest_target = v;
      const bool stop_now = is_target && options_.stop == StopRule::kFirstTarget;

      std::array<bool, 2> fired{false, false};
      if (!stop_now) {
        if (sol_.s1.contains(v)) {
          buffer1_.push_back(v);
          buffer_pool1_.insert(v, checked_add(key, checked_mul(hop_base_, w1[v])));
        }
        if (!sol_.s2.contains(v)) {
          buffer2_.push_back(v);
          buffer_pool2_.insert(v, checked_sub(key, checked_mul(hop_base_, w2[v])));
        }
        fired[0] = step_side1();
        fired[1] = step_side2();
      }
      const bool last = stop_now || queue_.empty();
      report(v, fired, last);
      if (stop_now) break;
    }

    if (nearest_target < 0)
      throw InvariantViolation("exchange graph has no st-path although S1 != S2");

    result.label = label_;
    result.target_label = checked_add(label_[nearest_target], 1);
    trace_back(nearest_target, result);
    result.stats = stats_;
    return result;
  }

 private:
  static constexpr Element kNoTarget = -1;
  static constexpr Element kExhausted = -2;

  void decrease(Element v, Integer value) {
    if (value >= estimate_[v]) return;
    if (estimate_[v] != kUnreached) queue_.erase({estimate_[v], v});
    estimate_[v] = value;
    queue_.insert({value, v});
  }

  void finalize(Element v, Integer key) {
    label_[v] = key;
    finalized_[v] = 1;
    unvisited_out1_.erase(v);
    unvisited_in2_.erase(v);
  }

  // Case 1 flushes the buffer by relaxing every candidate head; Case 2
  // relaxes only the best remaining edge out of each buffered vertex. A
  // buffered vertex keeps its last best head until that head is finalized:
  // the pool only shrinks, so the head stays the first valid one.
  bool step_side1() {
    const auto& w1 = sol_.split.w1;
    if (buffer1_.size() >= threshold_) {
      ++stats_.case1_fires[0];
      for (Element v : unvisited_out1_.elements()) {
        ++stats_.case1_finder_calls[0];
        const auto b =
            find_removal_exchange(*problem_.m1, sol_.s1.elements(), v, buffer_pool1_);
        if (b) decrease(v, relaxed(label_[*b], w1[*b] - w1[v], hop_base_));
      }
      clear_buffer(buffer1_, buffer_pool1_);
      return true;
    }
    for (Element b : buffer1_) {
      Element& head = head_[0][b];
      if (head == kExhausted || (head >= 0 && !finalized_[head])) continue;
      ++stats_.case2_finder_calls[0];
      const auto v = find_insertion_exchange(*problem_.m1, sol_.s1.elements(), b, unvisited_out1_);
      if (!v) {
        head = kExhausted;
        continue;
      }
      head = *v;
      decrease(*v, relaxed(label_[b], w1[b] - w1[*v], hop_base_));
    }
    return false;
  }

  bool step_side2() {
    const auto& w2 = sol_.split.w2;
    if (buffer2_.size() >= threshold_) {
      ++stats_.case1_fires[1];
      for (Element v : unvisited_in2_.elements()) {
        ++stats_.case1_finder_calls[1];
        const auto b =
            find_insertion_exchange(*problem_.m2, sol_.s2.elements(), v, buffer_pool2_);
        if (b) decrease(v, relaxed(label_[*b], w2[v] - w2[*b], hop_base_));
      }
      clear_buffer(buffer2_, buffer_pool2_);
      return true;
    }
    for (Element b : buffer2_) {
      Element& head = head_[1][b];
      if (head == kExhausted || (head >= 0 && !finalized_[head])) continue;
      ++stats_.case2_finder_calls[1];
      const auto v = find_removal_exchange(*problem_.m2, sol_.s2.elements(), b, unvisited_in2_);
      if (!v) {
        head = kExhausted;
        continue;
      }
      head = *v;
      decrease(*v, relaxed(label_[b], w2[*v] - w2[b], hop_base_));
    }
    return false;
  }

  void clear_buffer(std::vector<Element>& buffer, OrderedPool& pool) {
    auto& heads = &buffer == &buffer1_ ? head_[0] : head_[1];
    for (Element b : buffer) heads[b] = kNoTarget;
    buffer.clear();
    pool.clear();
  }

  void report(Element popped, std::array<bool, 2> fired, bool last) {
    if (options_.observer != nullptr) {
      SsspIterationView view{stats_.iterations, popped,   label_,   estimate_, finalized_,
                             buffer1_,          buffer2_, fired,    hop_base_, last};
      options_.observer->on_iteration(view);
    }
    if (options_.trace != nullptr) {
      const Integer key = label_[popped];
      *options_.trace << "{\"iteration\":" << stats_.iterations << ",\"popped\":" << popped
                      << ",\"distance\":" << json_integer(label_distance(key, hop_base_))
                      << ",\"hops\":" << json_integer(label_hops(key, hop_base_))
                      << ",\"buffer1\":" << buffer1_.size() << ",\"buffer2\":" << buffer2_.size()
                      << ",\"case1\":[" << (fired[0] ? "true" : "false") << ","
                      << (fired[1] ? "true" : "false") << "]"
                      << ",\"queries\":" << problem_.m1->queries() + problem_.m2->queries()
                      << "}\n";
    }
  }

  // Walks back from `last` choosing, at each vertex, the smallest-id tight
  // predecessor (E1 before E2 for the same predecessor). Finalized vertices
  // are pooled by label + H*w1 (E1 tails) and label - H*w2 (E2 tails), so the
  // first valid pool element is a tight predecessor.
  void trace_back(Element last, ShortestPathResult& result) {
    const auto& w1 = sol_.split.w1;
    const auto& w2 = sol_.split.w2;
    OrderedPool tails1(n_);
    OrderedPool tails2(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      const auto u = static_cast<Element>(i);
      if (!finalized_[u]) continue;
      if (sol_.s1.contains(u)) tails1.insert(u, checked_add(label_[u], checked_mul(hop_base_, w1[u])));
      if (!sol_.s2.contains(u)) tails2.insert(u, checked_sub(label_[u], checked_mul(hop_base_, w2[u])));
    }

    std::vector<Element> reversed{last};
    std::vector<EdgeSide> reversed_sides;
    Element v = last;
    while (label_[v] != 0) {
      std::optional<Element> pred;
      EdgeSide side = EdgeSide::kE1;
      if (!sol_.s1.contains(v)) {
        ++stats_.trace_finder_calls;
        const auto u = find_removal_exchange(*problem_.m1, sol_.s1.elements(), v, tails1);
        if (u && relaxed(label_[*u], w1[*u] - w1[v], hop_base_) == label_[v]) pred = u;
      }
      if (sol_.s2.contains(v)) {
        ++stats_.trace_finder_calls;
        const auto u = find_insertion_exchange(*problem_.m2, sol_.s2.elements(), v, tails2);
        if (u && relaxed(label_[*u], w2[v] - w2[*u], hop_base_) == label_[v] &&
            (!pred || *u < *pred)) {
          pred = u;
          side = EdgeSide::kE2;
        }
      }
      if (!pred)
        throw InvariantViolation("no tight predecessor for element " + std::to_string(v));
      reversed.push_back(*pred);
      reversed_sides.push_back(side);
      v = *pred;
    }
    result.path.assign(reversed.rbegin(), reversed.rend());
    result.sides.assign(reversed_sides.rbegin(), reversed_sides.rend());
  }

  const Problem& problem_;
  const PartialSolution& sol_;
  const SsspOptions& options_;
  std::size_t n_;
  Integer hop_base_;
  std::size_t threshold_ = 1;

  std::vector<Integer> label_;
  std::vector<Integer> estimate_;
  std::vector<char> finalized_;
  std::set<std::pair<Integer, Element>> queue_;

  OrderedPool unvisited_out1_;  // V \ S1 \ F by descending w1
  OrderedPool unvisited_in2_;   // S2 \ F by ascending w2
  OrderedPool buffer_pool1_;    // B1 by label + H*w1
  OrderedPool buffer_pool2_;    // B2 by label - H*w2
  std::vector<Element> buffer1_;
  std::vector<Element> buffer2_;
  // Cached best head per buffered vertex and side; a vertex of S1 \ S2
  // sits in both buffers.
  std::array<std::vector<Element>, 2> head_;

  SsspStats stats_;
};

}  // namespace

ShortestPathResult shortest_path_tree(const Problem& problem, const PartialSolution& sol,
                                      const SsspOptions& options) {
  return BufferedDijkstra(problem, sol, options).run();
}

std::vector<Integer> batch_relax(const Problem& problem, const PartialSolution& sol, int side,
                                 std::span<const Element> buffer, std::span<const Integer> label,
                                 std::span<const Element> targets) {
  const Integer hop_base = static_cast<Integer>(problem.size()) + 1;
  const auto& w1 = sol.split.w1;
  const auto& w2 = sol.split.w2;
  OrderedPool pool(problem.size());
  for (Element b : buffer) {
    pool.insert(b, side == 1 ? checked_add(label[b], checked_mul(hop_base, w1[b]))
                             : checked_sub(label[b], checked_mul(hop_base, w2[b])));
  }
  std::vector<Integer> out(targets.size(), kUnreached);
  if (pool.empty()) return out;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const Element v = targets[i];
    if (side == 1) {
      const auto b = find_removal_exchange(*problem.m1, sol.s1.elements(), v, pool);
      if (b) out[i] = relaxed(label[*b], w1[*b] - w1[v], hop_base);
    } else {
      const auto b = find_insertion_exchange(*problem.m2, sol.s2.elements(), v, pool);
      if (b) out[i] = relaxed(label[*b], w2[v] - w2[*b], hop_base);
    }
  }
  return out;
}

}  // namespace wmi
