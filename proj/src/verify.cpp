#include "wmi/verify.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wmi {

namespace {

void search_common(const Matroid& m1, const Matroid& m2, std::span<const std::int64_t> weight,
                   std::size_t next, std::vector<Element>& current, std::int64_t value,
                   BruteForceResult& best) {
  if (value > best.weight || (value == best.weight && current < best.set)) {
    best.set = current;
    best.weight = value;
  }
  for (std::size_t e = next; e < weight.size(); ++e) {
    current.push_back(static_cast<Element>(e));
    if (m1.is_independent(current) && m2.is_independent(current))
      search_common(m1, m2, weight, e + 1, current, value + weight[e], best);
    current.pop_back();
  }
}

std::vector<Element> swapped(std::span<const Element> base, Element out, Element in) {
  std::vector<Element> set;
  set.reserve(base.size());
  for (Element e : base)
    if (e != out) set.push_back(e);
  set.push_back(in);
  return set;
}

std::string describe_label(Integer label, Integer hop_base) {
  if (label == kUnreached) return "unreached";
  return to_string(label_distance(label, hop_base)) + "/" + to_string(label_hops(label, hop_base));
}

}  // namespace

BruteForceResult brute_force_best(const Matroid& m1, const Matroid& m2,
                                  std::span<const std::int64_t> weight) {
  if (weight.size() > kBruteForceLimit)
    throw std::length_error("brute force refuses ground sets larger than " +
                            std::to_string(kBruteForceLimit));
  if (m1.ground_size() != weight.size() || m2.ground_size() != weight.size())
    throw InstanceError("weights and matroids disagree on the ground set size");
  BruteForceResult best;
  std::vector<Element> current;
  search_common(m1, m2, weight, 0, current, 0, best);
  return best;
}

ExplicitExchangeGraph build_explicit_exchange_graph(const Problem& problem,
                                                    const PartialSolution& sol) {
  if (sol.s1 == sol.s2) throw std::invalid_argument("exchange graph needs S1 != S2");
  ExplicitExchangeGraph graph;
  graph.n = problem.size();
  const auto& w1 = sol.split.w1;
  const auto& w2 = sol.split.w2;
  const auto s1 = sol.s1.sorted();
  const auto s2 = sol.s2.sorted();
  auto add = [&graph](ExplicitEdge edge) {
    if (edge.weight < 0) graph.negative_edges.push_back(edge);
    graph.edges.push_back(edge);
  };
  for (std::size_t i = 0; i < graph.n; ++i) {
    const auto x = static_cast<Element>(i);
    if (sol.s1.contains(x) && !sol.s2.contains(x))
      add({graph.source(), x, EdgeKind::kSource, 0});
    if (sol.s2.contains(x) && !sol.s1.contains(x))
      add({x, graph.target(), EdgeKind::kTarget, 0});
  }
  for (Element x : s1) {
    for (std::size_t j = 0; j < graph.n; ++j) {
      const auto y = static_cast<Element>(j);
      if (sol.s1.contains(y)) continue;
      if (problem.m1->is_independent(swapped(s1, x, y)))
        add({x, y, EdgeKind::kE1, w1[x] - w1[y]});
    }
  }
  for (Element x : s2) {
    for (std::size_t j = 0; j < graph.n; ++j) {
      const auto y = static_cast<Element>(j);
      if (sol.s2.contains(y)) continue;
      if (problem.m2->is_independent(swapped(s2, x, y)))
        add({y, x, EdgeKind::kE2, w2[x] - w2[y]});
    }
  }
  return graph;
}

bool has_st_path(const ExplicitExchangeGraph& graph) {
  std::vector<std::vector<Element>> out(graph.n + 2);
  for (const auto& e : graph.edges) out[e.tail].push_back(e.head);
  std::vector<char> seen(graph.n + 2, 0);
  std::vector<Element> stack{graph.source()};
  seen[graph.source()] = 1;
  while (!stack.empty()) {
    const Element u = stack.back();
    stack.pop_back();
    if (u == graph.target()) return true;
    for (Element v : out[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return false;
}

ReferencePaths reference_shortest_paths(const ExplicitExchangeGraph& graph,
                                        const PartialSolution& sol) {
  if (!graph.negative_edges.empty())
    throw InvariantViolation("exchange graph has a negative edge");
  const std::size_t n = graph.n;
  ReferencePaths out;
  out.hop_base = static_cast<Integer>(n) + 1;
  out.label.assign(n, kUnreached);
  std::vector<std::vector<const ExplicitEdge*>> outgoing(n);
  std::vector<std::vector<const ExplicitEdge*>> incoming(n);
  std::set<std::pair<Integer, Element>> queue;
  for (const auto& e : graph.edges) {
    if (e.kind == EdgeKind::kSource) {
      out.label[e.head] = 0;
      queue.insert({0, e.head});
    } else if (e.kind != EdgeKind::kTarget) {
      outgoing[e.tail].push_back(&e);
      incoming[e.head].push_back(&e);
    }
  }
  std::vector<char> done(n, 0);
  while (!queue.empty()) {
    const auto [key, u] = *queue.begin();
    queue.erase(queue.begin());
    done[u] = 1;
    for (const ExplicitEdge* e : outgoing[u]) {
      if (done[e->head]) continue;
      const Integer value = checked_add(checked_add(key, checked_mul(e->weight, out.hop_base)), 1);
      if (value < out.label[e->head]) {
        if (out.label[e->head] != kUnreached) queue.erase({out.label[e->head], e->head});
        out.label[e->head] = value;
        queue.insert({value, e->head});
      }
    }
  }

  Element last = -1;
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = static_cast<Element>(i);
    if (!sol.s2.contains(x) || sol.s1.contains(x) || out.label[x] == kUnreached) continue;
    if (last < 0 || out.label[x] < out.label[last]) last = x;
  }
  if (last < 0) throw InvariantViolation("no st-path in the explicit exchange graph");
  out.target_label = out.label[last] + 1;

  std::vector<Element> reversed{last};
  std::vector<EdgeSide> reversed_sides;
  for (Element v = last; out.label[v] != 0;) {
    const ExplicitEdge* pick = nullptr;
    for (const ExplicitEdge* e : incoming[v]) {
      if (out.label[e->tail] == kUnreached) continue;
      if (out.label[e->tail] + e->weight * out.hop_base + 1 != out.label[v]) continue;
      if (pick == nullptr || e->tail < pick->tail ||
          (e->tail == pick->tail && e->kind == EdgeKind::kE1))
        pick = e;
    }
    if (pick == nullptr) throw InvariantViolation("reference trace found no tight predecessor");
    reversed.push_back(pick->tail);
    reversed_sides.push_back(pick->kind == EdgeKind::kE1 ? EdgeSide::kE1 : EdgeSide::kE2);
    v = pick->tail;
  }
  out.path.assign(reversed.rbegin(), reversed.rend());
  out.sides.assign(reversed_sides.rbegin(), reversed_sides.rend());
  return out;
}

std::string compare_with_reference(const ShortestPathResult& fast, const ReferencePaths& slow) {
  std::ostringstream diff;
  if (fast.label.size() != slow.label.size()) return "label vectors differ in length";
  for (std::size_t x = 0; x < fast.label.size(); ++x) {
    const bool compare = fast.full_tree || fast.label[x] != kUnreached;
    if (compare && fast.label[x] != slow.label[x]) {
      diff << "label of " << x << ": " << describe_label(fast.label[x], fast.hop_base)
           << " vs " << describe_label(slow.label[x], slow.hop_base) << "; ";
    }
  }
  if (fast.target_label != slow.target_label) diff << "target label differs; ";
  if (fast.path != slow.path) diff << "path differs; ";
  if (fast.sides != slow.sides) diff << "edge sides differ; ";
  return diff.str();
}

AxiomReport check_matroid_axioms(const Matroid& matroid, std::size_t samples, std::uint64_t seed) {
  AxiomReport report;
  const std::size_t n = matroid.ground_size();
  if (n == 0) return report;
  std::mt19937_64 rng(seed);
  auto coin = [&rng](double p) { return std::uniform_real_distribution<double>(0, 1)(rng) < p; };
  auto random_subset = [&](double p) {
    std::vector<Element> set;
    for (std::size_t i = 0; i < n; ++i)
      if (coin(p)) set.push_back(static_cast<Element>(i));
    return set;
  };
  auto random_basis = [&]() {
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<Element> basis;
    for (Element e : order) {
      basis.push_back(e);
      if (!matroid.is_independent(basis)) basis.pop_back();
    }
    return basis;
  };
  auto fail = [&report](std::string what, std::size_t sample) {
    report.violations.push_back(what + " (sample " + std::to_string(sample) + ")");
  };
  auto unite = [](std::vector<Element> a, std::span<const Element> b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    return a;
  };

  for (std::size_t sample = 0; sample < samples; ++sample) {
    const double density = std::uniform_real_distribution<double>(0, 1)(rng);
    const auto a = random_subset(density);
    const int rank_a = matroid.rank(a);
    ++report.checks;
    if (rank_a < 0 || rank_a > static_cast<int>(a.size())) fail("rank outside [0, |A|]", sample);

    const auto e = static_cast<Element>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
    if (!std::binary_search(a.begin(), a.end(), e)) {
      const Element extra[1] = {e};
      const int grown = matroid.rank(unite(a, extra));
      ++report.checks;
      if (grown < rank_a || grown > rank_a + 1) fail("adding one element changed rank by more than one", sample);
    }

    const auto b = unite(a, random_subset(0.3));
    ++report.checks;
    if (matroid.rank(b) < rank_a) fail("rank is not monotone", sample);

    const auto c = random_subset(density);
    std::vector<Element> meet;
    std::set_intersection(a.begin(), a.end(), c.begin(), c.end(), std::back_inserter(meet));
    ++report.checks;
    if (matroid.rank(unite(a, c)) + matroid.rank(meet) > rank_a + matroid.rank(c))
      fail("rank is not submodular", sample);

    const auto big = random_basis();
    std::vector<Element> part;
    for (Element x : big)
      if (coin(0.5)) part.push_back(x);
    ++report.checks;
    if (!matroid.is_independent(big)) fail("greedy basis is dependent", sample);
    if (!matroid.is_independent(part)) fail("subset of an independent set is dependent", sample);

    auto small = random_basis();
    if (!small.empty() && !big.empty()) {
      small.resize(std::uniform_int_distribution<std::size_t>(0, std::min(small.size(), big.size()) - 1)(rng));
      ++report.checks;
      bool found = false;
      for (Element x : big) {
        if (std::find(small.begin(), small.end(), x) != small.end()) continue;
        auto grown = small;
        grown.push_back(x);
        if (matroid.is_independent(grown)) {
          found = true;
          break;
        }
      }
      if (!found) fail("exchange property fails", sample);
    }
  }
  return report;
}

namespace {

class BrokenMatroid final : public Matroid {
 public:
  using Matroid::Matroid;
  std::string describe() const override { return "broken"; }

 protected:
  int rank_of(std::span<const Element> elements) const override {
    return elements.size() <= 2 ? static_cast<int>(elements.size()) : 1;
  }
};

}  // namespace

MatroidPtr make_broken_matroid(std::size_t n) { return std::make_shared<BrokenMatroid>(n); }

SsspInvariantChecker::SsspInvariantChecker(const ExplicitExchangeGraph& graph,
                                           const PartialSolution& sol,
                                           std::vector<Integer> exact_labels)
    : graph_(graph), sol_(sol), exact_(std::move(exact_labels)) {}

void SsspInvariantChecker::on_iteration(const SsspIterationView& view) {
  if (view.last) return;
  ++checked_;
  const std::size_t n = graph_.n;
  std::vector<char> buffered1(n, 0);
  std::vector<char> buffered2(n, 0);
  for (Element b : view.buffer1) buffered1[b] = 1;
  for (Element b : view.buffer2) buffered2[b] = 1;

  // Best relaxation into each vertex over edges leaving F outside the buffers.
  std::vector<Integer> bound(n, kUnreached);
  for (const auto& e : graph_.edges) {
    if (e.kind == EdgeKind::kTarget) continue;
    if (e.kind == EdgeKind::kSource) {
      bound[e.head] = 0;
      continue;
    }
    if (!view.finalized[e.tail] || view.finalized[e.head]) continue;
    if (e.kind == EdgeKind::kE1 && buffered1[e.tail]) continue;
    if (e.kind == EdgeKind::kE2 && buffered2[e.tail]) continue;
    bound[e.head] = std::min(bound[e.head], view.label[e.tail] + e.weight * view.hop_base + 1);
  }

  Integer next_exact = kUnreached;
  for (std::size_t v = 0; v < n; ++v) {
    if (view.finalized[v]) {
      if (view.label[v] != exact_[v])
        violations_.push_back("finalized label of " + std::to_string(v) + " is wrong");
      continue;
    }
    next_exact = std::min(next_exact, exact_[v]);
    if (view.estimate[v] < exact_[v])
      violations_.push_back("estimate below the true distance at " + std::to_string(v));
    if (view.estimate[v] > bound[v])
      violations_.push_back("estimate above an unbuffered relaxation at " + std::to_string(v));
  }
  if (next_exact == kUnreached) return;
  bool witnessed = false;
  for (std::size_t v = 0; v < n && !witnessed; ++v)
    witnessed = !view.finalized[v] && view.estimate[v] == next_exact;
  if (!witnessed)
    violations_.push_back("no unfinalized vertex carries the next distance at iteration " +
                          std::to_string(view.iteration));
}

}  // namespace wmi
