#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "wmi/types.hpp"

namespace wmi {

// Generation-stamped membership marks over a dense id range. clear() is O(1).
class ElementMarks {
 public:
  ElementMarks() = default;
  explicit ElementMarks(std::size_t size) : stamp_(size, 0) {}

  void resize(std::size_t size) { stamp_.assign(size, 0), generation_ = 1; }
  std::size_t capacity() const { return stamp_.size(); }

  void clear() {
    if (++generation_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      generation_ = 1;
    }
  }
  void mark(Element e) { stamp_[static_cast<std::size_t>(e)] = generation_; }
  bool contains(Element e) const { return stamp_[static_cast<std::size_t>(e)] == generation_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t generation_ = 1;
};

// A set described as `base \ excluded ∪ extra`, evaluated lazily by the rank
// oracle. `excluded` must mark exactly `excluded_count` members of `base`
// (marks outside `base` are ignored only if not counted); `extra` must be
// disjoint from the result of the exclusion.
class SetExpr {
 public:
  SetExpr() = default;
  explicit SetExpr(std::span<const Element> base) : base_(base) {}

  SetExpr& without(const ElementMarks& marks, std::size_t count_in_base) {
    excluded_ = &marks;
    excluded_count_ = count_in_base;
    return *this;
  }
  SetExpr& with(std::span<const Element> extra) {
    extra_ = extra;
    return *this;
  }

  std::size_t size() const { return base_.size() - excluded_count_ + extra_.size(); }

  void collect(std::vector<Element>& out) const {
    out.clear();
    out.reserve(size());
    if (excluded_ == nullptr) {
      out.insert(out.end(), base_.begin(), base_.end());
    } else {
      for (Element e : base_)
        if (!excluded_->contains(e)) out.push_back(e);
    }
    out.insert(out.end(), extra_.begin(), extra_.end());
  }

 private:
  std::span<const Element> base_;
  const ElementMarks* excluded_ = nullptr;
  std::size_t excluded_count_ = 0;
  std::span<const Element> extra_;
};

}  // namespace wmi
