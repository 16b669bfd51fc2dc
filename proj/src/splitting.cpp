#include "wmi/splitting.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <string>

#include "wmi/exchange.hpp"
#include "wmi/ordered_pool.hpp"

namespace wmi {

Integer initial_epsilon(std::span<const Integer> weight) {
  Integer max_weight = 0;
  for (Integer w : weight) max_weight = std::max(max_weight, w);
  Integer eps = 2;
  while (eps < max_weight) eps = checked_mul(eps, 2);
  return eps;
}

PartialSolution initial_solution(const Problem& problem, std::span<const Element> common_basis,
                                 int scale_exp) {
  for (Integer w : problem.weight)
    if (w < 0) throw InstanceError("initial_solution expects nonnegative weights");
  const Integer eps = initial_epsilon(problem.weight);
  PartialSolution sol;
  sol.split.epsilon = eps;
  sol.split.scale_exp = scale_exp;
  sol.split.w1.assign(problem.size(), eps / 2);
  sol.split.w2.assign(problem.size(), eps / 2);
  sol.s1 = ElementSet(problem.size(), common_basis);
  sol.s2 = sol.s1;
  return sol;
}

namespace {

// Eligible elements x in S1 \ S2 with p(x) < k, served FIFO or at random.
class EligibleQueue {
 public:
  EligibleQueue(std::size_t n, bool random, std::uint64_t seed)
      : queued_(n, 0), random_(random), rng_(seed) {}

  void push(Element e) {
    if (queued_[e]) return;
    queued_[e] = 1;
    items_.push_back(e);
  }

  bool empty() const { return items_.empty(); }

  Element pop() {
    std::size_t pos = 0;
    if (random_) pos = static_cast<std::size_t>(rng_() % items_.size());
    const Element e = items_[pos];
    if (random_) {
      items_[pos] = items_.back();
      items_.pop_back();
    } else {
      items_.pop_front();
    }
    queued_[e] = 0;
    return e;
  }

 private:
  std::deque<Element> items_;
  std::vector<char> queued_;
  bool random_;
  std::mt19937_64 rng_;
};

void check_maximum(const Problem& problem, const PartialSolution& sol, QueryStats* stats) {
  QueryStats::Scope scope(stats, Phase::kVerification);
  for (int side = 1; side <= 2; ++side) {
    const auto& w = side == 1 ? sol.split.w1 : sol.split.w2;
    const auto& s = side == 1 ? sol.s1 : sol.s2;
    const auto best = greedy_max_basis(problem.matroid(side), w);
    if (total_weight(w, best) != total_weight(w, s.elements()))
      throw InvariantViolation("weight adjustment: S" + std::to_string(side) +
                               " is no longer w" + std::to_string(side) + "-maximum");
  }
}

}  // namespace

AdjustmentResult adjust_weights(const Problem& problem, const PartialSolution& coarse, int k,
                                const AdjustOptions& options) {
  if (k < 1) throw std::invalid_argument("adjust_weights needs k >= 1");
  if (coarse.split.epsilon < 2 || coarse.split.epsilon % 2 != 0)
    throw std::invalid_argument("adjust_weights needs an even coarse epsilon");

  const std::size_t n = problem.size();
  const auto& w = problem.weight;
  const Integer eps = coarse.split.epsilon / 2;

  AdjustmentResult result;
  PartialSolution& sol = result.solution;
  sol.split.epsilon = eps;
  sol.split.scale_exp = coarse.split.scale_exp;
  sol.split.w1 = coarse.split.w1;
  sol.split.w2.resize(n);
  for (std::size_t x = 0; x < n; ++x)
    sol.split.w2[x] = checked_add(checked_sub(w[x], sol.split.w1[x]), eps);
  auto& w1 = sol.split.w1;
  auto& w2 = sol.split.w2;

  sol.s1 = ElementSet(n, greedy_max_basis(*problem.m1, w1));
  sol.s2 = ElementSet(n, greedy_max_basis(*problem.m2, w2));

  AdjustmentReport& report = result.report;
  report.k = k;
  report.epsilon = eps;
  report.p.assign(n, 0);
  report.adjustments.assign(n, 0);
  auto& p = report.p;

  // V \ S1 by descending w1, and S2 by ascending w2.
  OrderedPool outside_s1(n);
  OrderedPool inside_s2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto x = static_cast<Element>(i);
    if (!sol.s1.contains(x)) outside_s1.insert(x, priority_key(w1[x], Objective::kMax));
    if (sol.s2.contains(x)) inside_s2.insert(x, priority_key(w2[x], Objective::kMin));
  }

  auto eligible = [&](Element x) {
    return sol.s1.contains(x) && !sol.s2.contains(x) && p[x] < k;
  };
  EligibleQueue queue(n, options.random_order, options.seed);
  for (Element x : sol.s1.sorted())
    if (eligible(x)) queue.push(x);

  const bool check_each_step = options.debug_level >= 2 && n <= 64;

  while (!queue.empty()) {
    const Element x = queue.pop();
    if (!eligible(x)) continue;
    ++report.steps;
    ++report.adjustments[x];

    if (checked_add(w1[x], w2[x]) == checked_add(w[x], eps)) {
      w1[x] = checked_sub(w1[x], eps);
      const auto y = find_insertion_exchange(*problem.m1, sol.s1.elements(), x, outside_s1);
      if (y && w1[x] < w1[*y]) {
        sol.s1.erase(x);
        sol.s1.insert(*y);
        outside_s1.erase(*y);
        outside_s1.insert(x, priority_key(w1[x], Objective::kMax));
        ++report.swaps;
        if (eligible(*y)) queue.push(*y);
      }
    } else {
      ++p[x];
      w2[x] = checked_add(w2[x], eps);
      const auto y = find_removal_exchange(*problem.m2, sol.s2.elements(), x, inside_s2);
      if (y && w2[x] > w2[*y]) {
        sol.s2.erase(*y);
        sol.s2.insert(x);
        inside_s2.erase(*y);
        inside_s2.insert(x, priority_key(w2[x], Objective::kMin));
        ++report.swaps;
        if (eligible(*y)) queue.push(*y);
      }
    }

    const Integer sum = checked_add(w1[x], w2[x]);
    if (sum < w[x] || sum > checked_add(w[x], eps))
      throw InvariantViolation("weight adjustment broke the splitting bound at element " +
                               std::to_string(x));
    if (check_each_step) check_maximum(problem, sol, options.stats);
    if (eligible(x)) queue.push(x);
  }

  report.remaining_difference = difference_size(sol.s1, sol.s2);
  const auto r = static_cast<std::size_t>(problem.rank);
  report.difference_bound = (2 * r + static_cast<std::size_t>(k) - 1) / static_cast<std::size_t>(k);
  if (report.remaining_difference > report.difference_bound)
    throw InvariantViolation("weight adjustment left |S1 \\ S2| = " +
                             std::to_string(report.remaining_difference) + " > ceil(2r/k) = " +
                             std::to_string(report.difference_bound));
  for (std::size_t x = 0; x < n; ++x) {
    if (p[x] > k || report.adjustments[x] > 2 * p[x] + 1)
      throw InvariantViolation("weight adjustment exceeded its per-element step bound at " +
                               std::to_string(x));
  }
  if (options.debug_level >= 2) check_maximum(problem, sol, options.stats);
  return result;
}

}  // namespace wmi
