#include "wmi/transforms.hpp"

#include <algorithm>

namespace wmi {

TruncatedMatroid::TruncatedMatroid(MatroidPtr inner, int limit)
    : Matroid(inner->ground_size()), inner_(std::move(inner)), limit_(limit) {
  if (limit < 0) throw InstanceError("truncation limit must be >= 0");
}

int TruncatedMatroid::rank_of(std::span<const Element> elements) const {
  return std::min(inner_->rank(elements), limit_);
}

std::string TruncatedMatroid::describe() const {
  return "truncate(" + inner_->describe() + ", " + std::to_string(limit_) + ")";
}

PaddedMatroid::PaddedMatroid(MatroidPtr inner, int count)
    : Matroid(inner->ground_size() + static_cast<std::size_t>(count)),
      inner_(std::move(inner)),
      original_size_(inner_->ground_size()),
      count_(count) {
  if (count < 0) throw InstanceError("padding count must be >= 0");
}

int PaddedMatroid::rank_of(std::span<const Element> elements) const {
  std::vector<Element> real;
  real.reserve(elements.size());
  int free_count = 0;
  for (Element e : elements) {
    if (is_padding(e)) {
      ++free_count;
    } else {
      real.push_back(e);
    }
  }
  return std::min(inner_->rank(real) + free_count, count_);
}

std::string PaddedMatroid::describe() const {
  return "pad(" + inner_->describe() + ", " + std::to_string(count_) + ")";
}

RestrictedMatroid::RestrictedMatroid(MatroidPtr inner, std::vector<Element> kept)
    : Matroid(kept.size()), inner_(std::move(inner)), kept_(std::move(kept)) {
  for (Element e : kept_) {
    if (e < 0 || static_cast<std::size_t>(e) >= inner_->ground_size())
      throw InstanceError("restriction keeps an element outside the ground set");
  }
}

int RestrictedMatroid::rank_of(std::span<const Element> elements) const {
  std::vector<Element> mapped(elements.size());
  std::transform(elements.begin(), elements.end(), mapped.begin(),
                 [&](Element e) { return kept_[e]; });
  return inner_->rank(mapped);
}

std::string RestrictedMatroid::describe() const {
  return "restrict(" + inner_->describe() + ", " + std::to_string(kept_.size()) + ")";
}

MatroidPtr truncate(MatroidPtr inner, int limit) {
  return std::make_shared<TruncatedMatroid>(std::move(inner), limit);
}

MatroidPtr pad_with_free_elements(MatroidPtr inner, int count) {
  return std::make_shared<PaddedMatroid>(std::move(inner), count);
}

MatroidPtr restrict_to(MatroidPtr inner, std::vector<Element> kept) {
  return std::make_shared<RestrictedMatroid>(std::move(inner), std::move(kept));
}

NonnegativeRestriction discard_negative(std::span<const std::int64_t> weights) {
  NonnegativeRestriction out;
  out.remap.assign(weights.size(), -1);
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] >= 0) {
      out.remap[i] = static_cast<Element>(out.kept.size());
      out.kept.push_back(static_cast<Element>(i));
    }
  }
  return out;
}

}  // namespace wmi
