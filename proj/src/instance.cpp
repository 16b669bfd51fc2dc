#include "wmi/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

#include "wmi/families.hpp"

namespace wmi {

namespace {

using nlohmann::json;

// mt19937_64 output is fixed by the standard; the bounded draws and the
// shuffle are written out here so that generated instances never depend on
// library distribution implementations.
class StableRng {
 public:
  explicit StableRng(std::uint64_t seed) : engine_(seed) {}

  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i)
      std::swap(items[i - 1], items[static_cast<std::size_t>(between(0, static_cast<std::int64_t>(i) - 1))]);
  }

 private:
  std::mt19937_64 engine_;
};

[[noreturn]] void bad_field(const std::string& field, const std::string& message) {
  throw InstanceFormatError(field + ": " + message);
}

const json& member(const json& object, const std::string& key, const std::string& field) {
  if (!object.is_object()) bad_field(field, "expected an object");
  const auto it = object.find(key);
  if (it == object.end()) bad_field(field + "." + key, "missing");
  return *it;
}

std::int64_t integer(const json& value, const std::string& field, std::int64_t lo = 0,
                     std::int64_t hi = std::numeric_limits<std::int32_t>::max()) {
  if (!value.is_number_integer()) bad_field(field, "expected an integer");
  if (value.is_number_unsigned() && value.get<std::uint64_t>() > static_cast<std::uint64_t>(hi))
    bad_field(field, "out of range");
  const auto v = value.get<std::int64_t>();
  if (v < lo || v > hi) bad_field(field, "out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return v;
}

const json& array(const json& value, const std::string& field) {
  if (!value.is_array()) bad_field(field, "expected an array");
  return value;
}

json uniform_descriptor(int n, int k) { return {{"type", "uniform"}, {"n", n}, {"k", k}}; }

// Rank r: r singleton-capacity blocks, each seeded with one element so none is
// empty, the rest spread at random. r = 0 puts everything in one cap-0 block.
json random_partition(int n, int r, StableRng& rng) {
  std::vector<std::vector<Element>> blocks;
  std::vector<int> caps;
  if (r == 0) {
    std::vector<Element> all(n);
    std::iota(all.begin(), all.end(), 0);
    if (n > 0) {
      blocks.push_back(all);
      caps.push_back(0);
    }
  } else {
    std::vector<Element> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    blocks.resize(r);
    caps.assign(r, 1);
    for (int i = 0; i < n; ++i) {
      const auto b = i < r ? i : static_cast<int>(rng.between(0, r - 1));
      blocks[b].push_back(order[i]);
    }
    for (auto& block : blocks) std::sort(block.begin(), block.end());
  }
  return {{"type", "partition"}, {"blocks", blocks}, {"caps", caps}};
}

// Rank r: a random spanning tree on r + 1 vertices plus random extra edges.
json random_graphic(int n, int r, StableRng& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= r; ++v) edges.emplace_back(static_cast<int>(rng.between(0, v - 1)), v);
  for (int i = r; i < n; ++i) {
    if (r == 0) {
      edges.emplace_back(0, 0);
      continue;
    }
    const auto u = static_cast<int>(rng.between(0, r));
    auto v = static_cast<int>(rng.between(0, r - 1));
    if (v >= u) ++v;
    edges.emplace_back(u, v);
  }
  rng.shuffle(edges);
  json list = json::array();
  for (const auto& [u, v] : edges) list.push_back({u, v});
  return {{"type", "graphic"}, {"vertices", r + 1}, {"edges", list}};
}

// Rank r over GF(2)^r: a unit-triangular basis plus random columns.
json random_gf2(int n, int r, StableRng& rng) {
  std::vector<std::string> cols;
  for (int i = 0; i < r; ++i) {
    std::string bits(r, '0');
    bits[i] = '1';
    for (int j = 0; j < i; ++j) bits[j] = rng.between(0, 1) ? '1' : '0';
    cols.push_back(bits);
  }
  for (int i = r; i < n; ++i) {
    std::string bits(r, '0');
    for (int j = 0; j < r; ++j) bits[j] = rng.between(0, 1) ? '1' : '0';
    cols.push_back(bits);
  }
  rng.shuffle(cols);
  return {{"type", "linear_gf2"}, {"rows", r}, {"cols", cols}};
}

json random_side(const std::string& family, int n, int r, StableRng& rng) {
  if (family == "uniform") return uniform_descriptor(n, r);
  if (family == "partition") return random_partition(n, r, rng);
  if (family == "graphic") return random_graphic(n, r, rng);
  if (family == "gf2") return random_gf2(n, r, rng);
  throw std::invalid_argument("unknown matroid family " + family);
}

std::string format_double(double value, const char* format) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, format, value);
  return buffer;
}

}  // namespace

MatroidPtr build_matroid(const json& d, const std::string& field) {
  const json& type = member(d, "type", field);
  if (!type.is_string()) bad_field(field + ".type", "expected a string");
  const auto kind = type.get<std::string>();
  if (kind == "uniform") {
    const auto n = integer(member(d, "n", field), field + ".n");
    const auto k = integer(member(d, "k", field), field + ".k");
    return std::make_shared<UniformMatroid>(static_cast<std::size_t>(n), static_cast<int>(k));
  }
  if (kind == "partition") {
    const json& blocks = array(member(d, "blocks", field), field + ".blocks");
    const json& caps = array(member(d, "caps", field), field + ".caps");
    if (blocks.size() != caps.size()) bad_field(field + ".caps", "length differs from blocks");
    std::size_t total = 0;
    for (const auto& block : blocks) total += block.is_array() ? block.size() : 0;
    std::vector<std::vector<Element>> parsed(blocks.size());
    std::vector<int> parsed_caps(caps.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const std::string where = field + ".blocks[" + std::to_string(b) + "]";
      for (std::size_t i = 0; i < array(blocks[b], where).size(); ++i)
        parsed[b].push_back(static_cast<Element>(
            integer(blocks[b][i], where + "[" + std::to_string(i) + "]", 0,
                    static_cast<std::int64_t>(total) - 1)));
      parsed_caps[b] = static_cast<int>(integer(caps[b], field + ".caps[" + std::to_string(b) + "]"));
    }
    try {
      return std::make_shared<PartitionMatroid>(std::move(parsed), std::move(parsed_caps));
    } catch (const InstanceError& e) {
      bad_field(field, e.what());
    }
  }
  if (kind == "graphic") {
    const auto vertices = integer(member(d, "vertices", field), field + ".vertices");
    const json& edges = array(member(d, "edges", field), field + ".edges");
    std::vector<std::pair<int, int>> parsed;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string where = field + ".edges[" + std::to_string(i) + "]";
      if (!edges[i].is_array() || edges[i].size() != 2) bad_field(where, "expected [u, v]");
      parsed.emplace_back(static_cast<int>(integer(edges[i][0], where + "[0]", 0, vertices - 1)),
                          static_cast<int>(integer(edges[i][1], where + "[1]", 0, vertices - 1)));
    }
    return std::make_shared<GraphicMatroid>(static_cast<int>(vertices), std::move(parsed));
  }
  if (kind == "linear_gf2") {
    const auto rows = integer(member(d, "rows", field), field + ".rows");
    const json& cols = array(member(d, "cols", field), field + ".cols");
    std::vector<std::string> parsed;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const std::string where = field + ".cols[" + std::to_string(i) + "]";
      if (!cols[i].is_string()) bad_field(where, "expected a bit string");
      const auto bits = cols[i].get<std::string>();
      if (static_cast<std::int64_t>(bits.size()) != rows ||
          bits.find_first_not_of("01") != std::string::npos)
        bad_field(where, "expected " + std::to_string(rows) + " characters of 0/1");
      parsed.push_back(bits);
    }
    return LinearGf2Matroid::from_bitstrings(static_cast<int>(rows), parsed);
  }
  bad_field(field + ".type", "unknown matroid type \"" + kind + "\"");
}

Instance parse_instance(const json& doc) {
  if (!doc.is_object()) bad_field("(root)", "expected an object");
  Instance inst;
  inst.matroid1 = member(doc, "matroid1", "(root)");
  inst.matroid2 = member(doc, "matroid2", "(root)");
  inst.m1 = build_matroid(inst.matroid1, "matroid1");
  inst.m2 = build_matroid(inst.matroid2, "matroid2");
  const json& weights = array(member(doc, "weights", "(root)"), "weights");
  for (std::size_t i = 0; i < weights.size(); ++i)
    inst.weights.push_back(integer(weights[i], "weights[" + std::to_string(i) + "]",
                                   -(std::int64_t{1} << 62), std::int64_t{1} << 62));
  if (inst.m1->ground_size() != inst.m2->ground_size())
    bad_field("matroid2", "ground set size " + std::to_string(inst.m2->ground_size()) +
                              " differs from matroid1's " + std::to_string(inst.m1->ground_size()));
  if (inst.weights.size() != inst.m1->ground_size())
    bad_field("weights", "length " + std::to_string(inst.weights.size()) +
                             " differs from the ground set size " +
                             std::to_string(inst.m1->ground_size()));
  if (const auto meta = doc.find("meta"); meta != doc.end()) {
    if (!meta->is_object()) bad_field("meta", "expected an object");
    if (const auto name = meta->find("name"); name != meta->end() && name->is_string())
      inst.name = name->get<std::string>();
    if (const auto seed = meta->find("seed"); seed != meta->end()) {
      if (!seed->is_number_unsigned() && !seed->is_number_integer())
        bad_field("meta.seed", "expected an integer");
      inst.seed = seed->get<std::uint64_t>();
    }
  }
  return inst;
}

Instance parse_instance_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(end), '\n');
    const auto last_newline = text.rfind('\n', end == 0 ? 0 : end - 1);
    const std::size_t column = last_newline == std::string::npos ? end + 1 : end - last_newline;
    throw InstanceFormatError("line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ": malformed JSON (" + e.what() + ")");
  }
  return parse_instance(doc);
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InstanceFormatError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_instance_text(buffer.str());
}

json instance_to_json(const Instance& inst) {
  return {{"matroid1", inst.matroid1},
          {"matroid2", inst.matroid2},
          {"weights", inst.weights},
          {"meta", {{"name", inst.name}, {"seed", inst.seed}}}};
}

void save_instance(const Instance& inst, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InstanceFormatError("cannot write " + path.string());
  out << instance_to_json(inst).dump(1) << '\n';
  if (!out) throw InstanceFormatError("write failed for " + path.string());
}

const std::vector<std::string>& generator_families() {
  static const std::vector<std::string> families = {
      "graphic-partition", "matching",         "gf2-graphic",     "gf2-partition",
      "graphic-graphic",   "uniform-uniform",  "uniform-partition", "uniform-graphic",
      "uniform-gf2"};
  return families;
}

Instance generate_instance(const GenParams& p) {
  const auto& families = generator_families();
  if (std::find(families.begin(), families.end(), p.family) == families.end())
    throw std::invalid_argument("unknown family pair " + p.family);
  if (p.n < 0 || p.r < 0 || p.W < 0) throw std::invalid_argument("n, r and W must be nonnegative");
  if (p.r > p.n)
    throw std::invalid_argument("rank " + std::to_string(p.r) + " exceeds the ground set size " +
                                std::to_string(p.n));
  if (p.W > (std::int64_t{1} << 40)) throw std::invalid_argument("W above 2^40 is not supported");

  StableRng rng(p.seed);
  Instance inst;
  if (p.family == "matching") {
    // Elements are edges of a bipartite graph with r vertices per side that
    // contains a perfect matching; each side's partition caps every vertex at 1.
    if (p.r == 0 && p.n > 0) throw std::invalid_argument("matching needs r >= 1 when n > 0");
    std::vector<int> mate(p.r);
    std::iota(mate.begin(), mate.end(), 0);
    rng.shuffle(mate);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < p.r; ++i) edges.emplace_back(i, mate[i]);
    for (int i = p.r; i < p.n; ++i)
      edges.emplace_back(static_cast<int>(rng.between(0, p.r - 1)),
                         static_cast<int>(rng.between(0, p.r - 1)));
    rng.shuffle(edges);
    std::vector<std::vector<Element>> left(p.r), right(p.r);
    for (int e = 0; e < p.n; ++e) {
      left[edges[e].first].push_back(e);
      right[edges[e].second].push_back(e);
    }
    const std::vector<int> caps(p.r, 1);
    inst.matroid1 = {{"type", "partition"}, {"blocks", left}, {"caps", caps}};
    inst.matroid2 = {{"type", "partition"}, {"blocks", right}, {"caps", caps}};
  } else {
    const auto dash = p.family.find('-');
    inst.matroid1 = random_side(p.family.substr(0, dash), p.n, p.r, rng);
    inst.matroid2 = random_side(p.family.substr(dash + 1), p.n, p.r, rng);
  }
  const std::int64_t lo = p.negative ? -p.W : 0;
  for (int i = 0; i < p.n; ++i) inst.weights.push_back(rng.between(lo, p.W));
  inst.name = p.family + "-n" + std::to_string(p.n) + "-r" + std::to_string(p.r) + "-W" +
              std::to_string(p.W) + "-s" + std::to_string(p.seed) + (p.negative ? "-neg" : "");
  inst.seed = p.seed;
  inst.m1 = build_matroid(inst.matroid1, "matroid1");
  inst.m2 = build_matroid(inst.matroid2, "matroid2");
  return inst;
}

BenchCell parse_bench_cell(const std::string& text) {
  BenchCell cell;
  char tail = 0;
  long long W = 0;
  if (std::sscanf(text.c_str(), "%d:%d:%lld:%d%c", &cell.n, &cell.r, &W, &cell.seeds, &tail) != 4 ||
      cell.n < 0 || cell.r < 0 || W < 0 || cell.seeds < 1)
    throw std::invalid_argument("bench cell \"" + text + "\" is not n:r:W:seeds");
  cell.W = W;
  return cell;
}

double budget_ratio(const RunReport& report) {
  if (report.rank == 0 || report.n == 0) return 0;
  const double n = static_cast<double>(report.n);
  const double r = report.rank;
  const double denominator = n * std::pow(r, 0.75) *
                             std::log2(static_cast<double>(report.n_hat) + 2) *
                             std::log2(r * static_cast<double>(report.max_weight) + 2);
  return static_cast<double>(report.queries_excluding_init()) / denominator;
}

BenchRow bench_row(const std::string& name, const RunReport& report) {
  BenchRow row;
  row.name = name;
  row.n = report.n;
  row.r = report.rank;
  row.W = report.max_weight;
  row.queries_init = report.queries.phase_total(Phase::kInit);
  row.queries_adjust = report.queries.phase_total(Phase::kAdjustment);
  row.queries_sssp = report.queries.phase_total(Phase::kSssp);
  row.queries_total = report.queries.total();
  row.augmentations = report.augmentations;
  row.rounds = report.rounds;
  row.wall_ms = report.wall_ms;
  row.budget_ratio = budget_ratio(report);
  return row;
}

void write_bench_header(std::ostream& out) {
  out << "name,n,r,W,queries_init,queries_adjust,queries_sssp,queries_total,augmentations,rounds,"
         "wall_ms,budget_ratio\n";
}

void write_bench_row(std::ostream& out, const BenchRow& row) {
  out << row.name << ',' << row.n << ',' << row.r << ',' << row.W << ',' << row.queries_init << ','
      << row.queries_adjust << ',' << row.queries_sssp << ',' << row.queries_total << ','
      << row.augmentations << ',' << row.rounds << ',' << format_double(row.wall_ms, "%.3f") << ','
      << format_double(row.budget_ratio, "%.6g") << '\n';
}

std::vector<BenchRow> run_bench(const std::string& family, const std::vector<BenchCell>& cells,
                                const SolveConfig& config, std::ostream& csv,
                                std::ostream& errors) {
  write_bench_header(csv);
  std::vector<BenchRow> rows;
  for (const auto& cell : cells) {
    for (int seed = 0; seed < cell.seeds; ++seed) {
      GenParams params{family, cell.n, cell.r, cell.W, static_cast<std::uint64_t>(seed), false};
      try {
        const Instance inst = generate_instance(params);
        const SolveResult result = solve(inst.m1, inst.m2, inst.weights, config);
        rows.push_back(bench_row(inst.name, result.report));
        write_bench_row(csv, rows.back());
        csv.flush();
      } catch (const std::exception& e) {
        errors << "bench cell " << cell.n << ':' << cell.r << ':' << cell.W << " seed " << seed
               << " failed: " << e.what() << '\n';
      }
    }
  }
  return rows;
}

}  // namespace wmi
