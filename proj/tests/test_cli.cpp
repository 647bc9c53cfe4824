#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace ff;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "ffp");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const std::string& name) { return std::string(FF_SAMPLE_DIR) + "/" + name; }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "ffp_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Cli, SolveIntervalChainBudgetOne) {
  const auto r = run({"solve", "--method", "interval", "-i", sample("chain_intervals.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("budget: 1\n"), std::string::npos);
}

TEST(Cli, SolveJsonIsParseable) {
  const auto r = run({"solve", "--method", "udg", "-i", sample("plus_points.json"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = io::json::parse(r.out);
  EXPECT_EQ(j["budget"], 4);
  EXPECT_EQ(j["directions"].size(), 4u);
}

TEST(Cli, EmittedSchedulesRevalidate) {
  for (const auto& [method, file] : std::vector<std::pair<std::string, std::string>>{
           {"interval", "chain_intervals.json"}, {"interval", "star_intervals.json"}, {"udg", "plus_points.json"}}) {
    const auto r = run({"solve", "--method", method, "-i", sample(file), "--json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = io::json::parse(r.out);
    const auto sched = scratch("sched_" + file);
    write(sched, j.dump());
    const auto sim = run({"simulate", "-i", sample(file), "--schedule", sched.string(), "--budget",
                          std::to_string(j["budget"].get<int>())});
    EXPECT_EQ(sim.code, 0) << sim.out << sim.err;
  }
}

TEST(Cli, SimulateReportsFailureWithExitOne) {
  const auto r = run({"simulate", "-i", sample("plus_points.json"), "--schedule", sample("plus_schedule.json"),
                      "--budget", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("violation: step 1"), std::string::npos);
}

TEST(Cli, OracleChain) {
  const auto r = run({"oracle", "-i", sample("chain_intervals.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("optimal budget: 1\n"), std::string::npos);
}

TEST(Cli, ReduceEmitsAnInstance) {
  const auto r = run({"reduce", "--tree", sample("two_leaf_tree.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto inst = io::parse_instance_text(r.out);
  ASSERT_TRUE(inst.points());
  EXPECT_EQ(inst.targets.size(), 32u);  // 2 leaves x 4N images, N = 4
}

TEST(Cli, GenTwiceIsByteIdentical) {
  for (const char* kind : {"interval", "udg", "collinear"}) {
    const auto a = run({"gen", "--kind", kind, "--n", "9", "--seed", "7"});
    const auto b = run({"gen", "--kind", kind, "--n", "9", "--seed", "7"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    const auto j = io::json::parse(a.out);
    EXPECT_EQ(j["metadata"]["seed"], 7);
    EXPECT_EQ(io::parse_instance_text(a.out).size(), 9);
  }
  EXPECT_NE(run({"gen", "--seed", "7"}).out, run({"gen", "--seed", "8"}).out);
}

TEST(Cli, RatioRowsAndSummary) {
  const auto r = run({"ratio", "--n", "7", "--count", "6", "--seed", "1"});
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  int rows = 0;
  std::getline(in, line);
  EXPECT_EQ(line, "index\tn\tapprox\toptimal\tratio");
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') ++rows;
  EXPECT_EQ(rows, 6);
  EXPECT_NE(r.out.find("# instances: 6"), std::string::npos);
}

TEST(Cli, PlotDataIsTabSeparated) {
  const auto r = run({"solve", "--method", "interval", "-i", sample("chain_intervals.json"), "--plot-data"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("level\tB\n1\t0\n"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"solve", "--bogus"}).code, 2);
  EXPECT_EQ(run({"solve", "--method", "simplex", "-i", sample("chain_intervals.json")}).code, 2);
  EXPECT_EQ(run({"solve", "--method", "interval", "-i", "/nonexistent.json"}).code, 2);
  EXPECT_EQ(run({"solve", "--method", "interval", "-i", sample("plus_points.json")}).code, 2);
  EXPECT_EQ(run({"gen", "--json", "--plot-data"}).code, 2);
  const auto bad = scratch("bad.json");
  write(bad, R"({"format": "firefighter-instance", "version": 1, "kind": "points", "points": [[0, 0]], "source": 0, "targets": [5]})");
  const auto r = run({"oracle", "-i", bad.string()});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("/targets/0"), std::string::npos);
}

TEST(Cli, SolverErrorsExitOne) {
  const auto f = scratch("source_target.json");
  write(f, R"({"format": "firefighter-instance", "version": 1, "kind": "points", "points": [[0, 0], [1, 0]], "source": 0, "targets": [0]})");
  EXPECT_EQ(run({"solve", "--method", "udg", "-i", f.string()}).code, 1);
  EXPECT_EQ(run({"oracle", "-i", f.string()}).code, 1);
}

TEST(Cli, HelpExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("solve"), std::string::npos);
}
