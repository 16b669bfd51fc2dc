#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "wmi/augment.hpp"
#include "wmi/matroid.hpp"
#include "wmi/splitting.hpp"
#include "wmi/sssp.hpp"

namespace wmi {

struct Rational {
  int num = 1;
  int den = 1;
};

// max(1, ceil(r^(num/den))), computed exactly.
int ceil_power(int r, Rational exponent);

struct SolveConfig {
  Rational k_exponent{3, 4};
  Rational buffer_exponent{1, 2};
  std::optional<int> k_override;
  int debug_level = 1;  // 0 none, 1 cheap post-conditions, 2 full maximality checks
  std::uint64_t seed = 0;
  bool random_adjust_order = false;
  StopRule stop = StopRule::kFirstTarget;
  bool certify = true;
  SsspObserver* observer = nullptr;
  std::ostream* trace = nullptr;

  // Test hooks, called after every weight adjustment and every augmentation.
  std::function<void(const Problem&, const PartialSolution& coarse, const AdjustmentResult&)>
      on_adjust;
  std::function<void(const Problem&, const PartialSolution& before, const ShortestPathResult&,
                     const PartialSolution& after, const AugmentationRecord&)>
      on_augment;
};

struct MaxCardinalityResult {
  std::vector<Element> basis;  // a largest common independent set
  int rank = 0;
  // Elements reachable in the final exchange graph; certifies maximality via
  // rank1(V \ cover) + rank2(cover) = rank.
  std::vector<Element> cover;
  std::size_t augmentations = 0;
};

// Greedy start followed by shortest augmenting paths in the unweighted
// exchange graph, discovered through the exchange finders.
MaxCardinalityResult max_cardinality_intersection(const Matroid& m1, const Matroid& m2);

struct RoundReport {
  Integer epsilon = 0;
  std::size_t adjust_steps = 0;
  std::size_t adjust_swaps = 0;
  std::size_t difference_after_adjust = 0;
  std::size_t difference_bound = 0;
  std::size_t augmentations = 0;
};

struct RunReport {
  std::size_t n = 0;       // input ground set
  std::size_t n_kept = 0;  // after discarding negative weights
  std::size_t n_hat = 0;   // kept plus padding
  int rank = 0;
  std::int64_t max_weight = 0;
  int scale_exp = 0;
  Integer epsilon0 = 0;
  int k = 0;
  int buffer_threshold = 0;
  std::size_t rounds = 0;
  std::size_t augmentations = 0;
  std::size_t init_augmentations = 0;
  std::array<std::size_t, 2> case1_fires{0, 0};
  std::vector<RoundReport> round_reports;
  QueryStats queries;
  double wall_ms = 0;
  bool certified = false;

  std::uint64_t queries_excluding_init() const {
    return queries.phase_total(Phase::kAdjustment) + queries.phase_total(Phase::kSssp) +
           queries.phase_total(Phase::kAugmentation);
  }
  nlohmann::json to_json() const;
};

// Everything needed to re-check optimality from the original oracles.
struct Certificate {
  std::vector<Element> kept;  // original ids with nonnegative weight
  int rank = 0;
  int scale_exp = 0;
  Integer epsilon = 1;
  std::vector<Integer> w1;  // over kept ids followed by rank padding ids
  std::vector<Integer> w2;
  std::vector<Element> basis;  // common basis of the padded problem
  std::vector<Element> cover;  // in kept ids
};

struct SolveResult {
  std::vector<Element> solution;  // original ids, ascending
  Integer weight = 0;
  Certificate certificate;
  RunReport report;
};

class CertificateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maximum-weight common independent set of m1 and m2.
SolveResult solve(const MatroidPtr& m1, const MatroidPtr& m2, std::span<const std::int64_t> weight,
                  const SolveConfig& config = {});

struct RefineResult {
  PartialSolution solution;
  RoundReport report;
};

// 2eps-solution -> eps-solution: weight adjustment, then augmentations until
// the two bases agree.
RefineResult refine(const Problem& problem, const PartialSolution& coarse, int k,
                    const SolveConfig& config, QueryStats* stats = nullptr);

enum class CertifyFailure {
  kNone,
  kMalformed,
  kCover,
  kBasisNotCommon,
  kSplittingBound,
  kNotMaximum1,
  kNotMaximum2,
};

struct CertifyResult {
  bool ok = false;
  CertifyFailure reason = CertifyFailure::kMalformed;
  std::string detail;
};

const char* certify_failure_name(CertifyFailure reason);

// Standalone optimality proof check; independent of solver state.
CertifyResult certify_optimality(const Certificate& certificate, const MatroidPtr& m1,
                                 const MatroidPtr& m2, std::span<const std::int64_t> weight);

}  // namespace wmi
