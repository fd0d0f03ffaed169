#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using json = nlohmann::json;

namespace {

struct Run {
  int code;
  json report;
  std::string err;
};

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("hardy_cli_test_" + name)).string();
}

std::string write_config(const std::string& name, const json& j) {
  const std::string path = temp_path(name);
  std::ofstream(path) << j.dump();
  return path;
}

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hardy");
  std::ostringstream out, err;
  const int code = hardy::cli::run(args, out, err);
  return {code, json::parse(out.str()), err.str()};
}

std::string data(const std::string& name) { return std::string(HARDY_DATA_DIR) + "/" + name; }

const std::vector<std::string> kFields{"subcommand", "input_digest", "seed", "outputs",
                                       "certificates", "wall_time", "verdict", "error"};

void expect_schema(const json& r) {
  for (const auto& f : kFields) EXPECT_TRUE(r.contains(f)) << f;
}

std::vector<std::string> keys(const json& obj) {
  std::vector<std::string> k;
  for (auto it = obj.begin(); it != obj.end(); ++it) k.push_back(it.key());
  return k;
}

}  // namespace

TEST(Cli, CarlesonThreeNodes) {
  const auto path = write_config("carleson.json", {{"nodes", {{0.0, 0.0}, {0.5, 0.0}, {-0.5, 0.0}}}});
  const auto r = run({"carleson-check", "--config", path});
  EXPECT_EQ(r.code, 0);
  expect_schema(r.report);
  EXPECT_NEAR(r.report["outputs"]["constant"].get<double>(), 0.25, 1e-15);
  EXPECT_EQ(r.report["verdict"], "PASS");
  EXPECT_EQ(r.report["subcommand"], "carleson-check");
}

TEST(Cli, CarlesonThresholdFails) {
  const auto path = write_config("carleson_m.json", {{"nodes", {{0.0, 0.0}, {0.5, 0.0}, {-0.5, 0.0}}}});
  const auto r = run({"carleson-check", "--config", path, "--m", "0.3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.report["verdict"], "FAIL");
}

TEST(Cli, PickBelowMinimalNormIsInfeasible) {
  const auto r = run({"pick-solve", "--config", data("pick-infeasible.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.report["error"]["type"], "infeasible");
  EXPECT_LT(r.report["error"]["min_eigenvalue"].get<double>(), 0.0);
  EXPECT_EQ(r.report["outputs"]["feasibility"]["certificate"].size(), 2u);
  const auto ok = run({"pick-solve", "--config", data("pick.json")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_LT(ok.report["outputs"]["residual"].get<double>(), 1e-9);
  EXPECT_EQ(keys(ok.report["outputs"]), keys(r.report["outputs"]));
}

TEST(Cli, MalformedJsonPointsAtTheDocument) {
  const std::string path = temp_path("broken.json");
  std::ofstream(path) << "{\"nodes\": [1, 2,";
  const auto r = run({"carleson-check", "--config", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.report["error"]["pointer"], "/");
}

TEST(Cli, BadFieldPointsAtTheField) {
  const auto path = write_config("bad_node.json", {{"nodes", {{0.0, 0.0}, {0.5, 0.0}, {1.5, 0.0}}}});
  const auto r = run({"carleson-check", "--config", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.report["error"]["pointer"], "/nodes/2");
  const auto missing = run({"pick-solve", "--config", write_config("no_targets.json", {{"nodes", {0.1}}})});
  EXPECT_EQ(missing.code, 1);
  EXPECT_EQ(missing.report["error"]["pointer"], "/targets");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"no-such-command"}).code, 1);
  EXPECT_EQ(run({"carleson-check"}).code, 1);  // needs --config
  EXPECT_EQ(run({"riesz-example", "--grid", "12"}).code, 1);
  EXPECT_EQ(run({"carleson-check", "--config", "/nonexistent/file.json"}).code, 1);
}

TEST(Cli, EveryBundledConfigRuns) {
  const std::vector<std::pair<std::string, std::string>> cases{
      {"carleson-check", "carleson.json"}, {"radii-search", "radii.json"},    {"pick-solve", "pick.json"},
      {"drury-construct", "drury.json"},   {"peak-build", "peak-arcs.json"},  {"pw-margin", "pw-margin.json"},
      {"perturb-check", "perturb.json"},   {"riesz-example", "riesz.json"},   {"sidon-check", "sidon.json"},
      {"cantor-gen", "cantor.json"}};
  for (const auto& [cmd, file] : cases) {
    const auto r = run({cmd, "--config", data(file)});
    EXPECT_EQ(r.code, 0) << cmd << ": " << r.err;
    expect_schema(r.report);
    EXPECT_EQ(r.report["verdict"], "PASS") << cmd;
  }
}

TEST(Cli, SameSeedSameReport) {
  for (const std::string cmd : {"riesz-example", "sidon-check"}) {
    auto a = run({cmd, "--seed", "42"}).report;
    auto b = run({cmd, "--seed", "42"}).report;
    a.erase("wall_time");
    b.erase("wall_time");
    EXPECT_EQ(a.dump(), b.dump()) << cmd;
  }
  const auto a = run({"riesz-example", "--seed", "1"}).report;
  const auto b = run({"riesz-example", "--seed", "2"}).report;
  EXPECT_NE(a["input_digest"], b["input_digest"]);
}

TEST(Cli, RieszDefaults) {
  const auto r = run({"riesz-example"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NEAR(r.report["outputs"]["rho"].get<double>(), 0.5, 1e-15);
  EXPECT_NEAR(r.report["outputs"]["witness_ratio"].get<double>(), 0.5, 1e-12);
  EXPECT_EQ(r.report["outputs"]["constants"]["method"], "exact");
}

TEST(Cli, HeatmapCsv) {
  const std::string out = temp_path("heat.csv");
  const auto r = run({"heatmap", "--config", data("peak-arcs.json"), "--grid", "4x16", "--out", out});
  EXPECT_EQ(r.code, 0);
  std::ifstream f(out);
  std::string line;
  std::getline(f, line);
  EXPECT_EQ(line, "re,im,value");
  int rows = 0;
  while (std::getline(f, line)) ++rows;
  EXPECT_EQ(rows, 64);
  EXPECT_EQ(r.report["outputs"]["rows"], 64);
}

TEST(Cli, CantorCsvAndExactResidual) {
  const std::string out = temp_path("cantor.csv");
  const auto path = write_config("cantor3.json", {{"alpha", 0}, {"beta", 1}, {"rho", {"1/4", "1/16", "1/64"}}});
  const auto r = run({"cantor-gen", "--config", path, "--out", out});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.report["outputs"]["residual"], "9/16");
  std::ifstream f(out);
  std::string line;
  std::getline(f, line);
  EXPECT_EQ(line, "n,x_n,separation");
  const auto bad = run({"cantor-gen", "--config", write_config("cantor_bad.json", {{"alpha", 0}, {"beta", 1}, {"rho", {"1/2", "1/4"}}})});
  EXPECT_EQ(bad.code, 1);
}

TEST(Cli, PerturbationBeyondMarginFails) {
  const json cfg = {{"base", {{"vectors", {{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}}}}},
                    {"perturbed", {{"vectors", {{{0, 0}, {0, 0}}, {{0, 0}, {1, 0}}}}}},
                    {"q", 2}};
  const auto r = run({"perturb-check", "--config", write_config("perturb_bad.json", cfg)});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.report["outputs"]["pass"].get<bool>());
}

TEST(Cli, DigestIsFnv1a) {
  EXPECT_EQ(hardy::cli::fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(hardy::cli::fnv1a_hex("a"), "af63dc4c8601ec8c");
}
