#pragma once

#include <span>
#include <string>
#include <vector>

#include "wmi/matroid.hpp"

namespace wmi {

// Sets larger than `limit` become dependent: rank(S) = min(inner(S), limit).
class TruncatedMatroid final : public Matroid {
 public:
  TruncatedMatroid(MatroidPtr inner, int limit);
  int limit() const { return limit_; }
  std::string describe() const override;

 protected:
  int rank_of(std::span<const Element> elements) const override;

 private:
  MatroidPtr inner_;
  int limit_;
};

// Appends `count` free elements Z with ids [n, n + count):
// rank(S) = min(inner(S \ Z) + |S ∩ Z|, count).
class PaddedMatroid final : public Matroid {
 public:
  PaddedMatroid(MatroidPtr inner, int count);
  std::size_t original_size() const { return original_size_; }
  bool is_padding(Element e) const { return static_cast<std::size_t>(e) >= original_size_; }
  std::string describe() const override;

 protected:
  int rank_of(std::span<const Element> elements) const override;

 private:
  MatroidPtr inner_;
  std::size_t original_size_;
  int count_;
};

// The restriction of `inner` to `kept`; new id i stands for kept[i].
class RestrictedMatroid final : public Matroid {
 public:
  RestrictedMatroid(MatroidPtr inner, std::vector<Element> kept);
  const std::vector<Element>& kept() const { return kept_; }
  std::string describe() const override;

 protected:
  int rank_of(std::span<const Element> elements) const override;

 private:
  MatroidPtr inner_;
  std::vector<Element> kept_;
};

MatroidPtr truncate(MatroidPtr inner, int limit);
MatroidPtr pad_with_free_elements(MatroidPtr inner, int count);
MatroidPtr restrict_to(MatroidPtr inner, std::vector<Element> kept);

struct NonnegativeRestriction {
  std::vector<Element> kept;   // original ids with weight >= 0, ascending
  std::vector<Element> remap;  // original id -> new id, or -1 if discarded
};

NonnegativeRestriction discard_negative(std::span<const std::int64_t> weights);

}  // namespace wmi
