#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

namespace {

namespace cli = hlog::cli;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::initializer_list<const char*> args) {
  std::vector<const char*> argv{"hlog"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::ostringstream out, err;
  const int code = cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> data_lines(const std::string& csv) {
  std::vector<std::string> lines;
  std::istringstream in(csv);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') lines.push_back(line);
  }
  return lines;
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path.string();
}

TEST(Cli, ListNamesEveryEntry) {
  const auto r = run({"list"});
  EXPECT_EQ(r.code, cli::kExitOk);
  for (const auto& e : cli::curve_registry()) EXPECT_NE(r.out.find(e.name), std::string::npos);
  for (const auto& e : cli::table_registry()) EXPECT_NE(r.out.find(e.name), std::string::npos);
}

TEST(Cli, AObjectiveCurveStartsAtOneHalf) {
  const auto r = run({"curve", "A-objective", "--points", "8"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 9u);
  EXPECT_EQ(lines[0], "r,value");
  EXPECT_EQ(lines[1], "0,0.5");
  EXPECT_NE(r.out.find("# command: curve A-objective"), std::string::npos);
}

TEST(Cli, HinfObjectiveCurveStartsAtOne) {
  const auto lines = data_lines(run({"curve", "hinf-objective", "--points", "4"}).out);
  ASSERT_GE(lines.size(), 2u);
  EXPECT_EQ(lines[1], "0,1");
}

TEST(Cli, AlphaBoundsContainsThreeHalves) {
  const auto lines = data_lines(run({"curve", "alpha-bounds", "--points", "4"}).out);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], "alpha,lower,upper");
  double alpha = 0.0, lower = 0.0, upper = 0.0;
  ASSERT_EQ(std::sscanf(lines[2].c_str(), "%lf,%lf,%lf", &alpha, &lower, &upper), 3);
  EXPECT_EQ(alpha, 1.5);
  EXPECT_NEAR(lower, 1.0707963267948966, 1e-14);
  EXPECT_NEAR(upper, 5.1415926535897932, 1e-14);
}

TEST(Cli, NormSummaryRows) {
  const auto r = run({"table", "norm-summary", "--alpha", "1.5"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto lines = data_lines(r.out);
  ASSERT_EQ(lines.size(), 5u);
  EXPECT_EQ(lines[1], "B,B_log,1.5,1.5,1.5");
  EXPECT_EQ(lines[2], "H^inf,H^inf_log,1,1,1");
  EXPECT_EQ(lines[3], "H^1,H^1_log,3.1415926535897931,6.2831853071795862,");
  EXPECT_EQ(lines[4].rfind("B^1.5,B^1.5_log,1.07079632679489", 0), 0u) << lines[4];
}

TEST(Cli, IcBoundsAllHold) {
  const auto lines = data_lines(run({"table", "ic-bounds"}).out);
  ASSERT_EQ(lines.size(), 29u);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    EXPECT_EQ(lines[i].substr(lines[i].rfind(',') + 1), "true") << lines[i];
  }
}

TEST(Cli, UnboundednessTable) {
  const auto lines = data_lines(run({"table", "unboundedness"}).out);
  ASSERT_EQ(lines.size(), 61u);
  EXPECT_EQ(lines[0], "alpha,j,r,value");
}

TEST(Cli, UnknownNamesAreUsageErrors) {
  const auto c = run({"curve", "no-such-curve"});
  EXPECT_EQ(c.code, cli::kExitUsage);
  EXPECT_NE(c.err.find("A-objective"), std::string::npos);
  EXPECT_EQ(run({"table", "no-such-table"}).code, cli::kExitUsage);
}

TEST(Cli, BadArgumentsAreUsageErrors) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--bogus"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--tol", "-1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--trunc", "8"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "--alpha", "1.9999"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"curve", "h1-g", "--points", "1"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"curve", "h1-g", "--format", "xml"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"curve", "h1-g", "--config", "/nonexistent/hlog.json"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, JsonOutputParses) {
  const auto r = run({"curve", "h1-g", "--points", "5", "--format", "json"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "curve h1-g");
  EXPECT_EQ(j["columns"].size(), 2u);
  ASSERT_EQ(j["rows"].size(), 5u);
  EXPECT_EQ(j["rows"][0][0].get<double>(), 0.0);
  EXPECT_EQ(j["rows"][0][1].get<double>(), 1.0);
  EXPECT_EQ(j["config"]["points"], 5);
}

TEST(Cli, ConfigFileWithFlagOverride) {
  const auto path = temp_file("hlog_cli_test.json", R"({"points": 3, "output_format": "json", "tolerance": 1e-9})");
  const auto a = run({"curve", "hinf-g", "--config", path.c_str()});
  ASSERT_EQ(a.code, cli::kExitOk) << a.err;
  const auto ja = nlohmann::json::parse(a.out);
  EXPECT_EQ(ja["rows"].size(), 3u);
  EXPECT_EQ(ja["config"]["tolerance"].get<double>(), 1e-9);

  const auto b = run({"curve", "hinf-g", "--config", path.c_str(), "--format", "csv"});
  ASSERT_EQ(b.code, cli::kExitOk) << b.err;
  EXPECT_EQ(data_lines(b.out).size(), 4u);

  const auto bad = temp_file("hlog_cli_bad.json", R"({"colour": 1})");
  EXPECT_EQ(run({"curve", "hinf-g", "--config", bad.c_str()}).code, cli::kExitUsage);
  std::remove(path.c_str());
  std::remove(bad.c_str());
}

TEST(Cli, RepeatedRunsAreByteIdentical) {
  const auto a = run({"curve", "B-objective", "--points", "16"});
  const auto b = run({"curve", "B-objective", "--points", "16"});
  ASSERT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ValidateDirectly) {
  cli::RunConfig c;
  EXPECT_NO_THROW(cli::validate(c));
  c.tolerance = 0.0;
  EXPECT_THROW(cli::validate(c), std::invalid_argument);
  c = {};
  c.alpha_grid = {1.5, 2.5};
  EXPECT_THROW(cli::validate(c), std::invalid_argument);
}

}  // namespace
