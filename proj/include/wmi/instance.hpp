#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "wmi/matroid.hpp"
#include "wmi/solver.hpp"

namespace wmi {

// A problem instance as stored on disk. Descriptors are kept verbatim so that
// instances round-trip byte for byte.
struct Instance {
  nlohmann::json matroid1;
  nlohmann::json matroid2;
  std::vector<std::int64_t> weights;
  std::string name;
  std::uint64_t seed = 0;

  MatroidPtr m1;
  MatroidPtr m2;

  std::size_t size() const { return weights.size(); }
};

// Bad JSON or a bad descriptor. what() names the line or field.
class InstanceFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

MatroidPtr build_matroid(const nlohmann::json& descriptor, const std::string& field);
Instance parse_instance(const nlohmann::json& document);
Instance parse_instance_text(const std::string& text);
Instance load_instance(const std::filesystem::path& path);
nlohmann::json instance_to_json(const Instance& instance);
void save_instance(const Instance& instance, const std::filesystem::path& path);

// Supported generator family pairs, first matroid then second.
const std::vector<std::string>& generator_families();

struct GenParams {
  std::string family = "graphic-partition";
  int n = 0;               // ground set size
  int r = 0;               // rank of each generated matroid
  std::int64_t W = 0;      // weights drawn from [0, W], or [-W, W] with negative
  std::uint64_t seed = 0;
  bool negative = false;
};

// Deterministic for fixed parameters on every platform. Throws
// std::invalid_argument for unknown families or unsatisfiable parameters.
Instance generate_instance(const GenParams& params);

struct BenchCell {
  int n = 0;
  int r = 0;
  std::int64_t W = 0;
  int seeds = 1;
};

// Parses "n:r:W:seeds".
BenchCell parse_bench_cell(const std::string& text);

struct BenchRow {
  std::string name;
  std::size_t n = 0;
  int r = 0;
  std::int64_t W = 0;
  std::uint64_t queries_init = 0;
  std::uint64_t queries_adjust = 0;
  std::uint64_t queries_sssp = 0;
  std::uint64_t queries_total = 0;
  std::size_t augmentations = 0;
  std::size_t rounds = 0;
  double wall_ms = 0;
  double budget_ratio = 0;
};

// queries excluding init / (n r^(3/4) log2(n_hat + 2) log2(r W + 2))
double budget_ratio(const RunReport& report);
BenchRow bench_row(const std::string& name, const RunReport& report);

void write_bench_header(std::ostream& out);
void write_bench_row(std::ostream& out, const BenchRow& row);

// Solves every (cell, seed) and streams one row each. A failing instance is
// reported on `errors` and the sweep continues. Returns the rows written.
std::vector<BenchRow> run_bench(const std::string& family, const std::vector<BenchCell>& cells,
                                const SolveConfig& config, std::ostream& csv,
                                std::ostream& errors);

}  // namespace wmi
