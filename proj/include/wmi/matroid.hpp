#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "wmi/set_expr.hpp"
#include "wmi/types.hpp"

namespace wmi {

// Rank-oracle access to a matroid over the ground set [0, ground_size()).
// Every call to rank() is one oracle query and bumps the query counter.
class Matroid {
 public:
  explicit Matroid(std::size_t ground_size) : ground_size_(ground_size) {}
  virtual ~Matroid() = default;
  Matroid(const Matroid&) = delete;
  Matroid& operator=(const Matroid&) = delete;

  std::size_t ground_size() const { return ground_size_; }

  int rank(const SetExpr& set) const;
  int rank(std::span<const Element> set) const { return rank(SetExpr(set)); }
  bool is_independent(std::span<const Element> set) const {
    return rank(set) == static_cast<int>(set.size());
  }

  std::uint64_t queries() const { return queries_.load(std::memory_order_relaxed); }

  virtual std::string describe() const = 0;

 protected:
  // `elements` are distinct and in range.
  virtual int rank_of(std::span<const Element> elements) const = 0;

 private:
  std::size_t ground_size_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

using MatroidPtr = std::shared_ptr<const Matroid>;

enum class Phase : int { kInit = 0, kAdjustment, kSssp, kAugmentation, kVerification };
inline constexpr int kPhaseCount = 5;
const char* phase_name(Phase phase);

// Per-phase query counts for a pair of oracles. Queries are attributed to
// whichever phase is current when they happen.
class QueryStats {
 public:
  QueryStats() = default;
  QueryStats(const Matroid* m1, const Matroid* m2) : oracles_{m1, m2} { sync(); }

  std::uint64_t count(Phase phase, int side) const {
    return counts_[static_cast<int>(phase)][side - 1];
  }
  std::uint64_t phase_total(Phase phase) const { return count(phase, 1) + count(phase, 2); }
  std::uint64_t total() const;

  Phase current() const { return current_; }
  // Attributes everything since the last switch to the outgoing phase.
  void switch_to(Phase phase);
  void flush() { switch_to(current_); }

  class Scope {
   public:
    Scope(QueryStats* stats, Phase phase) : stats_(stats) {
      if (stats_ != nullptr) {
        previous_ = stats_->current();
        stats_->switch_to(phase);
      }
    }
    ~Scope() {
      if (stats_ != nullptr) stats_->switch_to(previous_);
    }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;

   private:
    QueryStats* stats_;
    Phase previous_ = Phase::kInit;
  };

 private:
  void sync();

  std::array<const Matroid*, 2> oracles_{nullptr, nullptr};
  std::array<std::uint64_t, 2> last_{0, 0};
  std::array<std::array<std::uint64_t, 2>, kPhaseCount> counts_{};
  Phase current_ = Phase::kInit;
};

}  // namespace wmi
