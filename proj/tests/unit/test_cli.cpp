#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "doctest.h"
#include "helpers.hpp"
#include "wmi/verify.hpp"

using namespace wmi;

namespace {

const std::filesystem::path kData = WMI_TEST_DATA_DIR;
const std::string kCli = WMI_CLI_PATH;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = kCli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("wmi_cli_test_" + name);
}

}  // namespace

TEST_CASE("solve prints the optimum of the matching instance") {
  const auto report = scratch("report.json");
  const auto result = run("solve " + (kData / "matching_canonical.json").string() +
                          " --certify --report " + report.string());
  CHECK(result.code == 0);
  CHECK(result.out.find("solution: 1 2\n") != std::string::npos);
  CHECK(result.out.find("weight: 9\n") != std::string::npos);
  const auto json = nlohmann::json::parse(slurp(report));
  CHECK(json["certified"] == true);
  CHECK(json["r"] == 2);
}

TEST_CASE("solve handles empty and corrupt files") {
  const auto empty = run("solve " + (kData / "empty.json").string() + " --certify");
  CHECK(empty.code == 0);
  CHECK(empty.out.find("weight: 0\n") != std::string::npos);
  CHECK(run("solve " + (kData / "corrupt.json").string()).code == 1);
  CHECK(run("solve " + (kData / "does_not_exist.json").string()).code == 1);
}

TEST_CASE("format errors name the line or field") {
  try {
    parse_instance_text(slurp(kData / "corrupt.json"));
    FAIL("expected a format error");
  } catch (const InstanceFormatError& e) {
    CHECK(std::string(e.what()).find("line 4") != std::string::npos);
  }
  const std::string bad_block =
      R"({"matroid1":{"type":"partition","blocks":[[0],["x"]],"caps":[1,1]},)"
      R"("matroid2":{"type":"uniform","n":2,"k":1},"weights":[1,2]})";
  CHECK_THROWS_WITH_AS(parse_instance_text(bad_block), doctest::Contains("matroid1.blocks[1][0]"),
                       InstanceFormatError);
  const std::string short_weights =
      R"({"matroid1":{"type":"uniform","n":2,"k":1},"matroid2":{"type":"uniform","n":2,"k":1},"weights":[1]})";
  CHECK_THROWS_WITH_AS(parse_instance_text(short_weights), doctest::Contains("weights"),
                       InstanceFormatError);
  const std::string bad_bits =
      R"({"matroid1":{"type":"linear_gf2","rows":2,"cols":["01","2"]},"matroid2":{"type":"uniform","n":2,"k":1},"weights":[1,1]})";
  CHECK_THROWS_WITH_AS(parse_instance_text(bad_bits), doctest::Contains("matroid1.cols[1]"),
                       InstanceFormatError);
}

TEST_CASE("instances round-trip") {
  const auto inst = load_instance(kData / "gen_graphic_partition_n40_r10_W32_s7.json");
  const auto again = parse_instance(instance_to_json(inst));
  CHECK(instance_to_json(again) == instance_to_json(inst));
  CHECK(inst.size() == 40);
}

TEST_CASE("generators are stable against the golden files") {
  const auto matching = generate_instance({"matching", 3, 2, 5, 0, false});
  CHECK(instance_to_json(matching) ==
        nlohmann::json::parse(slurp(kData / "gen_matching_n3_r2_W5_s0.json")));
  const auto graphic = generate_instance({"graphic-partition", 40, 10, 32, 7, false});
  CHECK(instance_to_json(graphic) ==
        nlohmann::json::parse(slurp(kData / "gen_graphic_partition_n40_r10_W32_s7.json")));

  const auto out = scratch("gen.json");
  CHECK(run("gen matching --n 3 --r 2 --W 5 --seed 0 -o " + out.string()).code == 0);
  CHECK(nlohmann::json::parse(slurp(out)) ==
        nlohmann::json::parse(slurp(kData / "gen_matching_n3_r2_W5_s0.json")));
}

TEST_CASE("generator parameter checks") {
  CHECK(run("gen graphic-partition --n 4 --r 5 --W 3").code == 1);
  CHECK(run("gen matching --n 4 --r 0 --W 3").code == 1);
  CHECK_THROWS_AS(generate_instance({"nope", 3, 1, 1, 0, false}), std::invalid_argument);
  for (const auto& family : generator_families()) {
    const auto inst = generate_instance({family, 12, 4, 9, 3, true});
    CHECK(inst.size() == 12);
    CHECK(inst.m1->rank(std::vector<Element>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}) == 4);
    for (auto w : inst.weights) CHECK((w >= -9 && w <= 9));
  }
}

TEST_CASE("uniform x uniform with k = n is a free problem") {
  const auto inst = generate_instance({"uniform-uniform", 5, 5, 20, 2, true});
  const auto result = solve(inst.m1, inst.m2, inst.weights);
  std::vector<Element> positive;
  std::int64_t total = 0;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (inst.weights[i] > 0) positive.push_back(static_cast<Element>(i));
    if (inst.weights[i] > 0) total += inst.weights[i];
  }
  CHECK(result.weight == total);
  for (Element e : positive)
    CHECK(std::find(result.solution.begin(), result.solution.end(), e) != result.solution.end());
}

TEST_CASE("verify command") {
  CHECK(run("verify " + (kData / "matching_canonical.json").string()).code == 0);
  CHECK(run("verify " + (kData / "uniform_n25.json").string()).code == 3);
  for (int seed = 0; seed < 100; ++seed) {
    const auto& families = generator_families();
    const auto inst = generate_instance(
        {families[seed % families.size()], 10 + seed % 7, 1 + seed % 5, 15, static_cast<std::uint64_t>(seed), seed % 2 == 1});
    const auto path = scratch("verify.json");
    save_instance(inst, path);
    CHECK(run("verify " + path.string()).code == 0);
  }
}

TEST_CASE("bench output") {
  const auto empty = run("bench");
  CHECK(empty.code == 0);
  CHECK(empty.out ==
        "name,n,r,W,queries_init,queries_adjust,queries_sssp,queries_total,augmentations,rounds,"
        "wall_ms,budget_ratio\n");

  const auto one = run("bench --cell 40:10:32:1");
  CHECK(one.code == 0);
  std::istringstream lines(one.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  const auto inst = generate_instance({"graphic-partition", 40, 10, 32, 0, false});
  const auto report = solve(inst.m1, inst.m2, inst.weights).report;
  std::ostringstream expected;
  expected << inst.name << ",40," << report.rank << "," << report.max_weight << "," << report.queries.phase_total(Phase::kInit) << ','
           << report.queries.phase_total(Phase::kAdjustment) << ','
           << report.queries.phase_total(Phase::kSssp) << ',' << report.queries.total() << ',';
  CHECK(row.rfind(expected.str(), 0) == 0);
  CHECK_THROWS_AS(parse_bench_cell("1:2:3"), std::invalid_argument);
}

TEST_CASE("debug level comes from the environment") {
  setenv("DEBUG_ASSERT_LEVEL", "2", 1);
  CHECK(run("solve " + (kData / "matching_canonical.json").string()).code == 0);
  unsetenv("DEBUG_ASSERT_LEVEL");
  CHECK(run("solve " + (kData / "matching_canonical.json").string() + " --debug-asserts 7").code != 0);
}
