#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include <ext/pb_ds/assoc_container.hpp>
#include <ext/pb_ds/tree_policy.hpp>

#include "wmi/types.hpp"

namespace wmi {

enum class Objective { kMin, kMax };

// Pool key realizing an objective: ascending key order visits the best
// priority first, ties broken by ascending id.
inline Integer priority_key(Integer priority, Objective objective) {
  return objective == Objective::kMin ? priority : -priority;
}

// Elements of a dense universe ordered by (key, id) in an order-statistics
// tree. Supports insert, erase, re-key, k-th access and prefix iteration.
class OrderedPool {
  using Entry = std::pair<Integer, Element>;
  using Tree = __gnu_pbds::tree<Entry, __gnu_pbds::null_type, std::less<Entry>,
                                __gnu_pbds::rb_tree_tag,
                                __gnu_pbds::tree_order_statistics_node_update>;

 public:
  using const_iterator = Tree::const_iterator;

  OrderedPool() = default;
  explicit OrderedPool(std::size_t universe) : key_(universe), present_(universe, 0) {}

  std::size_t universe() const { return present_.size(); }
  std::size_t size() const { return tree_.size(); }
  bool empty() const { return tree_.empty(); }
  bool contains(Element e) const { return present_[static_cast<std::size_t>(e)] != 0; }
  Integer key(Element e) const { return key_[static_cast<std::size_t>(e)]; }

  void insert(Element e, Integer key) {
    if (contains(e)) erase(e);
    key_[e] = key;
    present_[e] = 1;
    tree_.insert({key, e});
  }

  void erase(Element e) {
    if (!contains(e)) return;
    tree_.erase({key_[e], e});
    present_[e] = 0;
  }

  void rekey(Element e, Integer key) { insert(e, key); }

  void clear() {
    for (const auto& [k, e] : tree_) present_[e] = 0;
    tree_.clear();
  }

  // Element at position `index` in (key, id) order.
  Element nth(std::size_t index) const { return tree_.find_by_order(index)->second; }

  const_iterator begin() const { return tree_.begin(); }
  const_iterator end() const { return tree_.end(); }

  // Appends the first `count` elements in pool order to `out`.
  void prefix(std::size_t count, std::vector<Element>& out) const {
    auto it = tree_.begin();
    for (std::size_t i = 0; i < count && it != tree_.end(); ++i, ++it) out.push_back(it->second);
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    prefix(size(), out);
    return out;
  }

 private:
  Tree tree_;
  std::vector<Integer> key_;
  std::vector<char> present_;
};

}  // namespace wmi
