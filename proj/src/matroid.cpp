#include "wmi/matroid.hpp"

#include <algorithm>
#include <string>

namespace wmi {

std::string to_string(Integer value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work in the negative range so the minimum value does not overflow.
  Integer v = negative ? value : -value;
  std::string digits;
  while (v != 0) {
    const int digit = -static_cast<int>(v % 10);
    digits.push_back(static_cast<char>('0' + digit));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::int64_t to_int64(Integer value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw OverflowError("value " + to_string(value) + " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(value);
}

int Matroid::rank(const SetExpr& set) const {
  thread_local std::vector<Element> scratch;
  // Nested oracles (truncate/pad/restrict) re-enter rank(); keep a private copy.
  std::vector<Element> elements;
  set.collect(scratch);
  elements.swap(scratch);
  thread_local ElementMarks seen;
  if (seen.capacity() < ground_size_) seen.resize(ground_size_);
  seen.clear();
  for (Element e : elements) {
    if (e < 0 || static_cast<std::size_t>(e) >= ground_size_) {
      throw InstanceError("element id " + std::to_string(e) + " outside ground set of size " +
                          std::to_string(ground_size_));
    }
    if (seen.contains(e)) throw InstanceError("element id " + std::to_string(e) + " repeated");
    seen.mark(e);
  }
  queries_.fetch_add(1, std::memory_order_relaxed);
  const int result = rank_of(elements);
  elements.swap(scratch);
  return result;
}

const char* phase_name(Phase phase) {
  switch (phase) {
    case Phase::kInit: return "init";
    case Phase::kAdjustment: return "adjustment";
    case Phase::kSssp: return "sssp";
    case Phase::kAugmentation: return "augmentation";
    case Phase::kVerification: return "verification";
  }
  return "unknown";
}

std::uint64_t QueryStats::total() const {
  std::uint64_t sum = 0;
  for (const auto& row : counts_) sum += row[0] + row[1];
  return sum;
}

void QueryStats::sync() {
  for (int i = 0; i < 2; ++i) last_[i] = oracles_[i] != nullptr ? oracles_[i]->queries() : 0;
}

void QueryStats::switch_to(Phase phase) {
  for (int i = 0; i < 2; ++i) {
    if (oracles_[i] == nullptr) continue;
    const std::uint64_t now = oracles_[i]->queries();
    counts_[static_cast<int>(current_)][i] += now - last_[i];
    last_[i] = now;
  }
  current_ = phase;
}

}  // namespace wmi
