#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>

#include "report_io.hpp"

using namespace nclorentz;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  const std::string cmd = std::string(NCL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> manifest() {
  std::ifstream in(NCL_MANIFEST_PATH);
  std::vector<std::string> ids;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) ids.push_back(line);
  return ids;
}

RunConfig quick() {
  RunConfig cfg;
  cfg.samples = 3;
  return cfg;
}

}  // namespace

TEST(Report, CheckIdsMatchManifest) {
  const auto records = run_suite("all", quick());
  std::vector<std::string> ids;
  for (const auto& r : records) {
    ids.push_back(r.id);
    EXPECT_FALSE(r.anchor.empty()) << r.id;
    EXPECT_EQ(r.seconds, 0.0) << r.id;
  }
  EXPECT_EQ(ids, manifest());
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
}

TEST(Report, SuitesPartitionTheFullRun) {
  std::vector<std::string> ids;
  for (const auto& s : suite_names())
    for (const auto& r : run_suite(s, quick())) ids.push_back(r.id);
  std::sort(ids.begin(), ids.end());
  EXPECT_EQ(ids, manifest());
  EXPECT_THROW(run_suite("nonsense", quick()), ConfigError);
}

TEST(Report, SeventeenDigitFloats) {
  EXPECT_EQ(report::fmt17(0.1), "0.10000000000000001");
  EXPECT_EQ(report::fmt17(0.0), "0");
  const auto cfg = quick();
  const auto recs = run_suite("phs", cfg);
  const auto json = report::to_json(recs, cfg, "phs");
  EXPECT_EQ(json, report::to_json(run_suite("phs", cfg), cfg, "phs"));
  const auto j = nlohmann::json::parse(json);
  ASSERT_EQ(j["checks"].size(), recs.size());
  for (const auto& key : {"id", "anchor", "status", "residual", "seconds"}) EXPECT_TRUE(j["checks"][0].contains(key));
  EXPECT_EQ(j["config"]["samples"], 3);
}

TEST(Report, ConfigParsing) {
  RunConfig cfg;
  report::apply_setting(cfg, "lambda", "0.5, -0.25");
  report::apply_setting(cfg, "exact_lambda", "2/4, -3");
  report::apply_setting(cfg, "type", "II");
  EXPECT_EQ(cfg.lambdas, (std::vector<double>{0.5, -0.25}));
  EXPECT_EQ(cfg.exact_lambdas[0], Rational(1, 2));
  EXPECT_EQ(cfg.type, PhsType::II);
  EXPECT_THROW(report::apply_setting(cfg, "samples", "many"), ConfigError);
  EXPECT_THROW(report::apply_setting(cfg, "samples", "0"), ConfigError);
  EXPECT_THROW(report::apply_setting(cfg, "type", "IV"), ConfigError);
  EXPECT_THROW(report::apply_setting(cfg, "colour", "red"), ConfigError);
  EXPECT_THROW(report::apply_setting(cfg, "exact_lambda", "0.5"), ConfigError);
}

TEST(Cli, VerifyClassifyText) {
  const auto r = cli("verify classify");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("prop1.dimension = 0 pass"), std::string::npos) << r.out;
}

TEST(Cli, PhsSweepIsDeterministic) {
  const std::string args = "verify phs --type II --lambda -0.5 --samples 100 --seed 7 --format json --out -";
  const auto a = cli(args), b = cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["version"], report::kVersion);
  EXPECT_EQ(j["config"]["seed"], 7);
  for (const auto& c : j["checks"]) {
    EXPECT_EQ(c["status"], "pass") << c["id"];
    EXPECT_LT(c["residual"].get<double>(), 1e-9) << c["id"];
  }
}

TEST(Cli, ExitCodeReflectsFailures) {
  const auto r = cli("verify all --samples 5 --format json --out -");
  const auto j = nlohmann::json::parse(r.out);
  bool all = true;
  for (const auto& c : j["checks"]) all = all && c["status"] == "pass";
  EXPECT_EQ(r.code, all ? 0 : 1);
}

TEST(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(cli("verify phs --type IV").code, 2);
  EXPECT_EQ(cli("verify phs --samples -3").code, 2);
  EXPECT_EQ(cli("verify nonsense").code, 2);
  EXPECT_EQ(cli("verify phs --config /nonexistent/cfg").code, 2);
  EXPECT_EQ(cli("").code, 2);
}

TEST(Cli, ConfigFileAndOverrides) {
  const fs::path dir = fs::temp_directory_path() / "ncl_report_test";
  fs::create_directories(dir);
  const fs::path cfg = dir / "run.cfg";
  std::ofstream(cfg) << "# sweep\nsamples = 4\nseed = 11\ntype = III\n";
  const auto r = cli("verify phs --config " + cfg.string() + " --seed 12 --format json --out -");
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["config"]["samples"], 4);
  EXPECT_EQ(j["config"]["seed"], 12);
  EXPECT_EQ(j["config"]["type"], "III");
  std::ofstream(cfg) << "samples: 4\n";
  EXPECT_EQ(cli("verify phs --config " + cfg.string()).code, 2);
}

TEST(Cli, ReportDirectoryOverride) {
  const fs::path dir = fs::temp_directory_path() / "ncl_report_dir";
  fs::remove_all(dir);
  const std::string env = "NCL_REPORT_DIR=" + dir.string() + " ";
  const std::string cmd = env + NCL_CLI_PATH + " verify classify --format json --out classify.json 2>/dev/null";
  ASSERT_EQ(std::system(cmd.c_str()), 0);
  std::ifstream in(dir / "classify.json");
  ASSERT_TRUE(in.good());
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["config"]["run"], "classify");
}

TEST(Cli, ClassifyCommand) {
  const auto t = cli("classify --dim 2+1 --condition trivial");
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("dimension = 1"), std::string::npos) << t.out;
  EXPECT_NE(t.out.find("constraint: Lambda*c1^2 = 0"), std::string::npos) << t.out;
  const auto s = cli("classify --dim 2+1 --condition subbialgebra --format json --out -");
  const auto j = nlohmann::json::parse(s.out);
  ASSERT_EQ(j["constraints"].size(), 1u);
  EXPECT_EQ(j["constraints"][0], constraint_2plus1().to_string());
  const auto big = cli("classify --dim 3+1 --condition subbialgebra");
  EXPECT_NE(big.out.find("dimension = 15"), std::string::npos);
  EXPECT_NE(cli("classify --dim 3+1").out.find("270 rows, 45 unknowns"), std::string::npos);
}

TEST(Cli, TableCommand) {
  const auto l = cli("table --which lorentz");
  EXPECT_EQ(l.code, 0);
  EXPECT_NE(l.out.find("lorentz.B = triangular"), std::string::npos) << l.out;
  EXPECT_NE(l.out.find("lorentz.A = quasitriangular"), std::string::npos);
  const auto p = cli("table --which phs --samples 10 --format json --out -");
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(nlohmann::json::parse(p.out)["checks"].size(), 3u * (6 + 10));
  EXPECT_EQ(cli("table --which contracted").code, 0);
}
