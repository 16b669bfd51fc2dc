#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "wmi/instance.hpp"
#include "wmi/solver.hpp"
#include "wmi/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCertificate = 2;
constexpr int kExitTooLarge = 3;
constexpr int kExitMismatch = 4;

int debug_level_from_env() {
  const char* value = std::getenv("DEBUG_ASSERT_LEVEL");
  if (value == nullptr || *value == '\0') return 1;
  const int level = std::atoi(value);
  return level < 0 ? 0 : (level > 2 ? 2 : level);
}

void print_set(std::ostream& out, const std::vector<wmi::Element>& set) {
  for (std::size_t i = 0; i < set.size(); ++i) out << (i ? " " : "") << set[i];
  out << '\n';
}

int run_solve(const std::string& path, bool certify, int debug_level, const std::string& report,
              const std::string& trace_path) {
  const wmi::Instance inst = wmi::load_instance(path);
  wmi::SolveConfig config;
  config.certify = certify;
  config.debug_level = debug_level;
  config.seed = inst.seed;
  std::ofstream trace;
  if (!trace_path.empty()) {
    trace.open(trace_path);
    if (!trace) throw wmi::InstanceFormatError("cannot write " + trace_path);
    config.trace = &trace;
  }
  const wmi::SolveResult result = wmi::solve(inst.m1, inst.m2, inst.weights, config);
  std::cout << "solution: ";
  print_set(std::cout, result.solution);
  std::cout << "weight: " << wmi::to_string(result.weight) << '\n'
            << "rank: " << result.report.rank << '\n'
            << "queries: " << result.report.queries.total() << " (excluding init "
            << result.report.queries_excluding_init() << ")\n";
  if (certify) std::cout << "certificate: verified\n";
  if (!report.empty()) {
    std::ofstream out(report);
    out << result.report.to_json().dump(2) << '\n';
    if (!out) throw wmi::InstanceFormatError("cannot write " + report);
  }
  return kExitOk;
}

int run_verify(const std::string& path, int debug_level) {
  const wmi::Instance inst = wmi::load_instance(path);
  if (inst.size() > wmi::kBruteForceLimit) {
    std::cerr << "verify: ground set of " << inst.size() << " exceeds the brute-force limit of "
              << wmi::kBruteForceLimit << '\n';
    return kExitTooLarge;
  }
  wmi::SolveConfig config;
  config.debug_level = debug_level;
  config.seed = inst.seed;
  const wmi::SolveResult result = wmi::solve(inst.m1, inst.m2, inst.weights, config);
  const wmi::BruteForceResult best = wmi::brute_force_best(*inst.m1, *inst.m2, inst.weights);
  std::cout << "solver weight: " << wmi::to_string(result.weight) << '\n'
            << "brute force weight: " << best.weight << '\n';
  if (result.weight != best.weight) {
    std::cout << "MISMATCH\n";
    return kExitMismatch;
  }
  std::cout << "match\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weighted matroid intersection through rank oracles"};
  app.require_subcommand(1);

  int debug_level = debug_level_from_env();

  auto* solve_cmd = app.add_subcommand("solve", "Solve an instance file");
  std::string solve_path, report_path, trace_path;
  bool certify = false;
  solve_cmd->add_option("instance", solve_path, "Instance JSON")->required();
  solve_cmd->add_flag("--certify", certify, "Check the optimality certificate (exit 2 on failure)");
  solve_cmd->add_option("--report", report_path, "Write the run report as JSON");
  solve_cmd->add_option("--trace", trace_path, "Write shortest-path iterations as NDJSON");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  wmi::GenParams gen;
  std::string gen_out;
  gen_cmd->add_option("family", gen.family, "Family pair")
      ->required()
      ->check(CLI::IsMember(wmi::generator_families()));
  gen_cmd->add_option("--n", gen.n, "Ground set size")->required();
  gen_cmd->add_option("--r", gen.r, "Rank of each matroid")->required();
  gen_cmd->add_option("--W", gen.W, "Maximum absolute weight")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_flag("--negative", gen.negative, "Draw weights from [-W, W]");
  gen_cmd->add_option("-o,--out", gen_out, "Output file (default stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "Query-count sweep to CSV");
  std::string bench_family = "graphic-partition", bench_out;
  std::vector<std::string> cells;
  bench_cmd->add_option("--family", bench_family, "Family pair")
      ->check(CLI::IsMember(wmi::generator_families()));
  bench_cmd->add_option("--cell", cells, "Sweep cell n:r:W:seeds (repeatable)");
  bench_cmd->add_option("-o,--out", bench_out, "CSV file (default stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Compare the solver with brute force");
  std::string verify_path;
  verify_cmd->add_option("instance", verify_path, "Instance JSON")->required();

  for (auto* cmd : {solve_cmd, gen_cmd, bench_cmd, verify_cmd}) {
    cmd->add_option("--debug-asserts", debug_level, "Internal checks: 0 none, 1 cheap, 2 full")
        ->check(CLI::Range(0, 2));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*solve_cmd) return run_solve(solve_path, certify, debug_level, report_path, trace_path);
    if (*verify_cmd) return run_verify(verify_path, debug_level);
    if (*gen_cmd) {
      const wmi::Instance inst = wmi::generate_instance(gen);
      if (gen_out.empty()) {
        std::cout << wmi::instance_to_json(inst).dump(1) << '\n';
      } else {
        wmi::save_instance(inst, gen_out);
      }
      return kExitOk;
    }
    if (*bench_cmd) {
      std::vector<wmi::BenchCell> sweep;
      for (const auto& cell : cells) sweep.push_back(wmi::parse_bench_cell(cell));
      wmi::SolveConfig config;
      config.debug_level = debug_level;
      std::ofstream file;
      std::ostream* out = &std::cout;
      if (!bench_out.empty()) {
        file.open(bench_out);
        if (!file) throw wmi::InstanceFormatError("cannot write " + bench_out);
        out = &file;
      }
      wmi::run_bench(bench_family, sweep, config, *out, std::cerr);
      return kExitOk;
    }
  } catch (const wmi::CertificateError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCertificate;
  } catch (const wmi::InstanceFormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const wmi::InstanceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
