#include "wmi/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>

#include "wmi/exchange.hpp"
#include "wmi/ordered_pool.hpp"
#include "wmi/transforms.hpp"

namespace wmi {

namespace {

Integer power(Integer base, int exp) {
  Integer out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

nlohmann::json json_integer(Integer v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    return to_string(v);
  return static_cast<std::int64_t>(v);
}

}  // namespace

int ceil_power(int r, Rational exponent) {
  if (exponent.num <= 0 || exponent.den <= 0 || exponent.num > exponent.den)
    throw std::invalid_argument("exponent must lie in (0, 1]");
  if (r <= 1) return 1;
  const Integer bound = power(r, exponent.num);
  auto k = static_cast<int>(std::pow(static_cast<long double>(r),
                                     static_cast<long double>(exponent.num) / exponent.den));
  k = std::max(k, 1);
  while (power(k, exponent.den) < bound) ++k;
  while (k > 1 && power(k - 1, exponent.den) >= bound) --k;
  return k;
}

MaxCardinalityResult max_cardinality_intersection(const Matroid& m1, const Matroid& m2) {
  const std::size_t n = m1.ground_size();
  if (m2.ground_size() != n) throw InstanceError("matroids disagree on the ground set size");
  MaxCardinalityResult result;
  ElementSet s(n);

  for (std::size_t i = 0; i < n; ++i) {
    const Element extra[1] = {static_cast<Element>(i)};
    const int grown = static_cast<int>(s.size()) + 1;
    if (m1.rank(SetExpr(s.elements()).with(extra)) == grown &&
        m2.rank(SetExpr(s.elements()).with(extra)) == grown)
      s.insert(extra[0]);
  }

  for (;;) {
    const int size = static_cast<int>(s.size());
    std::vector<Element> parent(n, -1);
    std::vector<char> visited(n, 0);
    std::vector<Element> reached;
    OrderedPool outside(n);
    OrderedPool inside(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto x = static_cast<Element>(i);
      (s.contains(x) ? inside : outside).insert(x, x);
    }
    std::deque<Element> queue;
    auto visit = [&](Element x, Element from) {
      visited[x] = 1;
      parent[x] = from;
      reached.push_back(x);
      outside.erase(x);
      inside.erase(x);
      queue.push_back(x);
    };
    for (std::size_t i = 0; i < n; ++i) {
      const Element extra[1] = {static_cast<Element>(i)};
      if (s.contains(extra[0])) continue;
      if (m1.rank(SetExpr(s.elements()).with(extra)) == size + 1) visit(extra[0], -1);
    }

    Element found = -1;
    while (!queue.empty() && found < 0) {
      const Element u = queue.front();
      queue.pop_front();
      if (!s.contains(u)) {
        const Element extra[1] = {u};
        if (m2.rank(SetExpr(s.elements()).with(extra)) == size + 1) {
          found = u;
          break;
        }
        while (const auto y = find_removal_exchange(m2, s.elements(), u, inside)) visit(*y, u);
      } else {
        while (const auto x = find_insertion_exchange(m1, s.elements(), u, outside)) visit(*x, u);
      }
    }

    if (found < 0) {
      std::sort(reached.begin(), reached.end());
      result.cover = std::move(reached);
      break;
    }
    for (Element v = found; v >= 0; v = parent[v]) {
      if (s.contains(v)) {
        s.erase(v);
      } else {
        s.insert(v);
      }
    }
    ++result.augmentations;
  }

  result.basis = s.sorted();
  result.rank = static_cast<int>(s.size());
  return result;
}

RefineResult refine(const Problem& problem, const PartialSolution& coarse, int k,
                    const SolveConfig& config, QueryStats* stats) {
  RefineResult out;
  AdjustmentResult adjusted;
  {
    QueryStats::Scope scope(stats, Phase::kAdjustment);
    AdjustOptions options;
    options.random_order = config.random_adjust_order;
    options.seed = config.seed;
    options.debug_level = config.debug_level;
    options.stats = stats;
    adjusted = adjust_weights(problem, coarse, k, options);
  }
  if (config.on_adjust) {
    QueryStats::Scope scope(stats, Phase::kVerification);
    config.on_adjust(problem, coarse, adjusted);
  }

  out.report.epsilon = adjusted.report.epsilon;
  out.report.adjust_steps = adjusted.report.steps;
  out.report.adjust_swaps = adjusted.report.swaps;
  out.report.difference_after_adjust = adjusted.report.remaining_difference;
  out.report.difference_bound = adjusted.report.difference_bound;

  SsspOptions sssp_options;
  sssp_options.stop = config.stop;
  sssp_options.buffer_threshold = ceil_power(problem.rank, config.buffer_exponent);
  sssp_options.observer = config.observer;
  sssp_options.trace = config.trace;

  AugmentCheckOptions check_options;
  check_options.debug_level = config.debug_level;
  check_options.seed = config.seed;

  PartialSolution current = std::move(adjusted.solution);
  while (!current.is_solution()) {
    ShortestPathResult path;
    {
      QueryStats::Scope scope(stats, Phase::kSssp);
      path = shortest_path_tree(problem, current, sssp_options);
    }
    AugmentationRecord record;
    PartialSolution next;
    {
      QueryStats::Scope scope(stats, Phase::kAugmentation);
      next = apply_augmentation(problem, current, path, &record);
    }
    {
      QueryStats::Scope scope(stats, Phase::kVerification);
      check_augmentation(problem, current, next, record, check_options);
    }
    if (config.on_augment) {
      QueryStats::Scope scope(stats, Phase::kVerification);
      config.on_augment(problem, current, path, next, record);
    }
    current = std::move(next);
    if (++out.report.augmentations > out.report.difference_after_adjust)
      throw InvariantViolation("more augmentations than the initial |S1 \\ S2|");
  }
  out.solution = std::move(current);
  return out;
}

SolveResult solve(const MatroidPtr& m1, const MatroidPtr& m2, std::span<const std::int64_t> weight,
                  const SolveConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = weight.size();
  if (m1->ground_size() != n || m2->ground_size() != n)
    throw InstanceError("weights and matroids disagree on the ground set size");

  SolveResult result;
  RunReport& report = result.report;
  report.n = n;
  for (std::int64_t w : weight) report.max_weight = std::max(report.max_weight, w < 0 ? -w : w);

  NonnegativeRestriction restriction = discard_negative(weight);
  const std::vector<Element>& kept = restriction.kept;
  const MatroidPtr m1r = restrict_to(m1, kept);
  const MatroidPtr m2r = restrict_to(m2, kept);
  report.n_kept = kept.size();
  report.queries = QueryStats(m1r.get(), m2r.get());
  QueryStats* stats = &report.queries;

  MaxCardinalityResult init;
  {
    QueryStats::Scope scope(stats, Phase::kInit);
    init = max_cardinality_intersection(*m1r, *m2r);
  }
  const int r = init.rank;
  report.rank = r;
  report.init_augmentations = init.augmentations;

  Certificate& cert = result.certificate;
  cert.kept = kept;
  cert.rank = r;
  cert.cover = init.cover;

  int scale_exp = 0;
  while ((Integer{1} << scale_exp) < 4 * static_cast<Integer>(r)) ++scale_exp;
  report.scale_exp = scale_exp;
  cert.scale_exp = scale_exp;

  Problem problem;
  problem.rank = r;
  problem.m1 = pad_with_free_elements(truncate(m1r, r), r);
  problem.m2 = pad_with_free_elements(truncate(m2r, r), r);
  problem.weight.assign(kept.size() + static_cast<std::size_t>(r), 0);
  for (std::size_t i = 0; i < kept.size(); ++i)
    problem.weight[i] = checked_mul(weight[kept[i]], Integer{1} << scale_exp);
  report.n_hat = problem.size();

  PartialSolution sol;
  if (r == 0) {
    sol.split.epsilon = 1;
    sol.split.scale_exp = scale_exp;
    sol.split.w1 = problem.weight;
    sol.split.w2.assign(problem.size(), 0);
    sol.s1 = ElementSet(problem.size());
    sol.s2 = sol.s1;
  } else {
    sol = initial_solution(problem, init.basis, scale_exp);
    report.epsilon0 = sol.split.epsilon;
    const int k = config.k_override.value_or(ceil_power(r, config.k_exponent));
    report.k = k;
    report.buffer_threshold = ceil_power(r, config.buffer_exponent);
    while (sol.split.epsilon > 1) {
      RefineResult refined = refine(problem, sol, k, config, stats);
      report.augmentations += refined.report.augmentations;
      report.round_reports.push_back(refined.report);
      sol = std::move(refined.solution);
    }
    report.rounds = report.round_reports.size();
  }

  cert.epsilon = sol.split.epsilon;
  cert.w1 = sol.split.w1;
  cert.w2 = sol.split.w2;
  cert.basis = sol.s1.sorted();

  for (Element e : cert.basis) {
    if (static_cast<std::size_t>(e) < kept.size()) {
      result.solution.push_back(kept[e]);
      result.weight = checked_add(result.weight, weight[kept[e]]);
    }
  }
  std::sort(result.solution.begin(), result.solution.end());

  if (config.certify) {
    QueryStats::Scope scope(stats, Phase::kVerification);
    const CertifyResult verdict = certify_optimality(cert, m1, m2, weight);
    if (!verdict.ok)
      throw CertificateError(std::string("optimality certificate rejected: ") +
                             certify_failure_name(verdict.reason) + ": " + verdict.detail);
    report.certified = true;
  }
  stats->flush();
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return result;
}

const char* certify_failure_name(CertifyFailure reason) {
  switch (reason) {
    case CertifyFailure::kNone: return "ok";
    case CertifyFailure::kMalformed: return "malformed";
    case CertifyFailure::kCover: return "cover";
    case CertifyFailure::kBasisNotCommon: return "basis_not_common";
    case CertifyFailure::kSplittingBound: return "splitting_bound";
    case CertifyFailure::kNotMaximum1: return "not_maximum_1";
    case CertifyFailure::kNotMaximum2: return "not_maximum_2";
  }
  return "unknown";
}

CertifyResult certify_optimality(const Certificate& cert, const MatroidPtr& m1,
                                 const MatroidPtr& m2, std::span<const std::int64_t> weight) {
  auto reject = [](CertifyFailure reason, std::string detail) {
    return CertifyResult{false, reason, std::move(detail)};
  };
  const std::size_t n = weight.size();
  if (m1->ground_size() != n || m2->ground_size() != n)
    return reject(CertifyFailure::kMalformed, "ground set sizes differ");
  if (discard_negative(weight).kept != cert.kept)
    return reject(CertifyFailure::kMalformed, "kept set is not the nonnegative elements");
  const int r = cert.rank;
  if (r < 0 || cert.scale_exp < 0 || cert.scale_exp > 100 || cert.epsilon < 1)
    return reject(CertifyFailure::kMalformed, "bad rank, scale or epsilon");
  const std::size_t n_hat = cert.kept.size() + static_cast<std::size_t>(r);
  if (cert.w1.size() != n_hat || cert.w2.size() != n_hat)
    return reject(CertifyFailure::kMalformed, "split has the wrong length");
  // r * epsilon must stay below one unscaled unit for the integrality rounding.
  if (checked_mul(cert.epsilon, r) >= (Integer{1} << cert.scale_exp) && r > 0)
    return reject(CertifyFailure::kMalformed, "epsilon too coarse for the scale");

  const MatroidPtr m1r = restrict_to(m1, cert.kept);
  const MatroidPtr m2r = restrict_to(m2, cert.kept);

  std::vector<char> in_cover(cert.kept.size(), 0);
  for (Element e : cert.cover) {
    if (e < 0 || static_cast<std::size_t>(e) >= cert.kept.size() || in_cover[e])
      return reject(CertifyFailure::kMalformed, "cover has a bad id");
    in_cover[e] = 1;
  }
  std::vector<Element> complement;
  for (std::size_t i = 0; i < cert.kept.size(); ++i)
    if (!in_cover[i]) complement.push_back(static_cast<Element>(i));
  if (m1r->rank(complement) + m2r->rank(cert.cover) != r)
    return reject(CertifyFailure::kCover, "rank1(V \\ U) + rank2(U) != r");

  const MatroidPtr p1 = pad_with_free_elements(truncate(m1r, r), r);
  const MatroidPtr p2 = pad_with_free_elements(truncate(m2r, r), r);
  std::vector<char> in_basis(n_hat, 0);
  for (Element e : cert.basis) {
    if (e < 0 || static_cast<std::size_t>(e) >= n_hat || in_basis[e])
      return reject(CertifyFailure::kMalformed, "basis has a bad id");
    in_basis[e] = 1;
  }
  if (static_cast<int>(cert.basis.size()) != r || !p1->is_independent(cert.basis) ||
      !p2->is_independent(cert.basis))
    return reject(CertifyFailure::kBasisNotCommon, "basis is not a common basis of size r");

  for (std::size_t x = 0; x < n_hat; ++x) {
    const Integer scaled = x < cert.kept.size()
                               ? checked_mul(weight[cert.kept[x]], Integer{1} << cert.scale_exp)
                               : Integer{0};
    const Integer sum = checked_add(cert.w1[x], cert.w2[x]);
    if (sum < scaled || sum > checked_add(scaled, cert.epsilon))
      return reject(CertifyFailure::kSplittingBound,
                    "splitting bound fails at padded element " + std::to_string(x));
  }

  const auto best1 = greedy_max_basis(*p1, cert.w1);
  if (total_weight(cert.w1, best1) != total_weight(cert.w1, cert.basis))
    return reject(CertifyFailure::kNotMaximum1, "basis is not w1-maximum");
  const auto best2 = greedy_max_basis(*p2, cert.w2);
  if (total_weight(cert.w2, best2) != total_weight(cert.w2, cert.basis))
    return reject(CertifyFailure::kNotMaximum2, "basis is not w2-maximum");
  return CertifyResult{true, CertifyFailure::kNone, ""};
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json phases = nlohmann::json::object();
  for (int p = 0; p < kPhaseCount; ++p) {
    const auto phase = static_cast<Phase>(p);
    phases[phase_name(phase)] = {{"matroid1", queries.count(phase, 1)},
                                 {"matroid2", queries.count(phase, 2)},
                                 {"total", queries.phase_total(phase)}};
  }
  nlohmann::json rounds = nlohmann::json::array();
  for (const auto& round : round_reports) {
    rounds.push_back({{"epsilon", json_integer(round.epsilon)},
                      {"adjust_steps", round.adjust_steps},
                      {"adjust_swaps", round.adjust_swaps},
                      {"difference_after_adjust", round.difference_after_adjust},
                      {"difference_bound", round.difference_bound},
                      {"augmentations", round.augmentations}});
  }
  return {{"n", n},
          {"n_kept", n_kept},
          {"n_hat", n_hat},
          {"r", rank},
          {"W", max_weight},
          {"scale_exp", scale_exp},
          {"epsilon0", json_integer(epsilon0)},
          {"k", k},
          {"buffer_threshold", buffer_threshold},
          {"rounds", rounds},
          {"round_count", this->rounds},
          {"augmentations", augmentations},
          {"init_augmentations", init_augmentations},
          {"queries", phases},
          {"queries_total", queries.total()},
          {"queries_excluding_init", queries_excluding_init()},
          {"init_uses_simple_augmenting_paths", true},
          {"wall_ms", wall_ms},
          {"certified", certified}};
}

}  // namespace wmi
