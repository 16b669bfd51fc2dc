#include "wmi/exchange.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace wmi {

namespace {

ElementMarks& marks_for(std::size_t universe) {
  thread_local ElementMarks marks;
  if (marks.capacity() < universe) marks.resize(universe);
  marks.clear();
  return marks;
}

// Smallest j in [1, size] with pred(j), assuming pred is monotone and
// pred(size) already holds.
template <class Pred>
std::size_t first_true(std::size_t size, Pred&& pred) {
  std::size_t lo = 1;
  std::size_t hi = size;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

}  // namespace

std::optional<Element> find_removal_exchange(const Matroid& matroid, std::span<const Element> s,
                                             Element x, const OrderedPool& pool) {
  if (pool.empty()) return std::nullopt;
  const std::vector<Element> order = pool.elements();
#ifndef NDEBUG
  {
    ElementMarks& in_s = marks_for(matroid.ground_size());
    for (Element e : s) in_s.mark(e);
    assert(!in_s.contains(x) && "x must lie outside S");
    for (Element b : order) assert(in_s.contains(b) && "pool must be a subset of S");
  }
#endif
  const Element extra[1] = {x};
  const int full = static_cast<int>(s.size()) + 1;
  auto meets_circuit = [&](std::size_t j) {
    ElementMarks& removed = marks_for(matroid.ground_size());
    for (std::size_t i = 0; i < j; ++i) removed.mark(order[i]);
    const SetExpr probe = SetExpr(s).without(removed, j).with(extra);
    return matroid.rank(probe) == full - static_cast<int>(j);
  };
  if (!meets_circuit(order.size())) return std::nullopt;
  return order[first_true(order.size(), meets_circuit) - 1];
}

std::optional<Element> find_insertion_exchange(const Matroid& matroid, std::span<const Element> s,
                                               Element x, const OrderedPool& pool) {
  if (pool.empty()) return std::nullopt;
  const std::vector<Element> order = pool.elements();
#ifndef NDEBUG
  {
    ElementMarks& in_s = marks_for(matroid.ground_size());
    for (Element e : s) in_s.mark(e);
    assert(in_s.contains(x) && "x must lie in S");
    for (Element b : order) assert(!in_s.contains(b) && "pool must be disjoint from S");
  }
#endif
  const int target = static_cast<int>(s.size());
  ElementMarks& without_x = marks_for(matroid.ground_size());
  without_x.mark(x);
  auto reaches_full = [&](std::size_t j) {
    const SetExpr probe =
        SetExpr(s).without(without_x, 1).with(std::span<const Element>(order.data(), j));
    return matroid.rank(probe) >= target;
  };
  if (!reaches_full(order.size())) return std::nullopt;
  return order[first_true(order.size(), reaches_full) - 1];
}

std::vector<Element> greedy_max_basis(const Matroid& matroid, std::span<const Integer> f) {
  const std::size_t n = matroid.ground_size();
  std::vector<Element> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) { return f[a] > f[b]; });
  std::vector<Element> basis;
  for (Element e : order) {
    const Element extra[1] = {e};
    if (matroid.rank(SetExpr(basis).with(extra)) == static_cast<int>(basis.size()) + 1)
      basis.push_back(e);
  }
  return basis;
}

Integer total_weight(std::span<const Integer> f, std::span<const Element> set) {
  Integer sum = 0;
  for (Element e : set) sum = checked_add(sum, f[e]);
  return sum;
}

}  // namespace wmi
