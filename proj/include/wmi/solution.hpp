#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

#include "wmi/matroid.hpp"
#include "wmi/types.hpp"

namespace wmi {

// Subset of a dense universe with O(1) insert, erase and membership.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : position_(universe, -1) {}
  ElementSet(std::size_t universe, std::span<const Element> members) : ElementSet(universe) {
    for (Element e : members) insert(e);
  }

  std::size_t universe() const { return position_.size(); }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Element e) const { return position_[static_cast<std::size_t>(e)] >= 0; }

  void insert(Element e) {
    if (contains(e)) return;
    position_[e] = static_cast<int>(members_.size());
    members_.push_back(e);
  }

  void erase(Element e) {
    const int pos = position_[e];
    if (pos < 0) return;
    const Element last = members_.back();
    members_[pos] = last;
    position_[last] = pos;
    members_.pop_back();
    position_[e] = -1;
  }

  // Unordered view; invalidated by insert/erase.
  std::span<const Element> elements() const { return members_; }

  std::vector<Element> sorted() const {
    std::vector<Element> out(members_);
    std::sort(out.begin(), out.end());
    return out;
  }

  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size()) return false;
    for (Element e : a.members_)
      if (!b.contains(e)) return false;
    return true;
  }

 private:
  std::vector<int> position_;
  std::vector<Element> members_;
};

// Number of elements of `a` missing from `b`.
inline std::size_t difference_size(const ElementSet& a, const ElementSet& b) {
  std::size_t count = 0;
  for (Element e : a.elements())
    if (!b.contains(e)) ++count;
  return count;
}

inline std::size_t intersection_size(const ElementSet& a, const ElementSet& b) {
  return a.size() - difference_size(a, b);
}

// The scaled problem every refinement works on: two equal-rank matroids
// sharing a common basis of size `rank`, and nonnegative weights in scaled
// units.
struct Problem {
  MatroidPtr m1;
  MatroidPtr m2;
  std::vector<Integer> weight;
  int rank = 0;

  std::size_t size() const { return weight.size(); }
  const Matroid& matroid(int side) const { return side == 1 ? *m1 : *m2; }
};

// An epsilon-splitting (w1, w2) of the scaled weights:
// weight(x) <= w1(x) + w2(x) <= weight(x) + epsilon.
struct WeightSplit {
  std::vector<Integer> w1;
  std::vector<Integer> w2;
  Integer epsilon = 1;
  int scale_exp = 0;
};

// (split, S1, S2) with S_i a w_i-maximum basis of matroid i.
struct PartialSolution {
  WeightSplit split;
  ElementSet s1;
  ElementSet s2;

  bool is_solution() const { return s1 == s2; }
};

// Index of the first element violating the splitting bound, or -1.
inline Element first_splitting_violation(std::span<const Integer> weight, const WeightSplit& split) {
  for (std::size_t x = 0; x < weight.size(); ++x) {
    const Integer sum = checked_add(split.w1[x], split.w2[x]);
    if (sum < weight[x] || sum > checked_add(weight[x], split.epsilon))
      return static_cast<Element>(x);
  }
  return -1;
}

}  // namespace wmi
