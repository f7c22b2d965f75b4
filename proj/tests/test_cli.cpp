#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "woct/field_io.hpp"
#include "woct/signals.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("woct_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  Outcome run(const std::string& args) const {
    const std::string cmd = std::string(WOCT_CLI_PATH) + " " + args + " >" + path("stdout") + " 2>" +
                            path("stderr");
    const int status = std::system(cmd.c_str());
    Outcome r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = read(path("stdout"));
    r.err = read(path("stderr"));
    return r;
  }

  static std::string read(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

std::string type_name(const json& v) {
  if (v.is_object()) return "object";
  if (v.is_array()) return "array";
  if (v.is_string()) return "string";
  if (v.is_boolean()) return "boolean";
  if (v.is_number()) return "number";
  return "null";
}

// exact: no keys beyond the golden set.
void expect_shape(const json& value, const json& shape, const std::string& where, bool exact = true) {
  ASSERT_TRUE(value.is_object()) << where;
  if (exact) EXPECT_EQ(value.size(), shape.size()) << where << ": " << value.dump();
  for (const auto& [key, type] : shape.items()) {
    ASSERT_TRUE(value.contains(key)) << where << " lacks " << key;
    EXPECT_EQ(type_name(value[key]), type.get<std::string>()) << where << "." << key;
  }
}

// Result entries and the top level are pinned exactly; a run config may
// carry command-specific extras beyond the golden keys.
void expect_report_schema(const json& report, bool run_config = true) {
  const json golden = json::parse(std::ifstream(std::string(WOCT_GOLDEN_DIR) + "/report_schema.json"));
  expect_shape(report, golden["report"], "report");
  if (run_config) {
    expect_shape(report["config"], golden["config"], "config", false);
    for (const char* g : {"t", "window", "omega", "mu"})
      expect_shape(report["config"]["grids"][g], golden["grid"], std::string("grid ") + g);
  }
  ASSERT_FALSE(report["results"].empty());
  for (const auto& e : report["results"]) expect_shape(e, golden["entry"], "entry");
}

TEST_F(CliTest, PassingCheckExitsZero) {
  const Outcome r = run("verify --check shift --check reassembly --grid 4,4,4,0.75");
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  expect_report_schema(j);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["command"], "verify");
  EXPECT_EQ(j["tool"], "woct");
}

TEST_F(CliTest, FailingCheckExitsOne) {
  // The sign-flipped parity relation does not hold; its residual is 2.
  const Outcome r = run("verify --check parity --grid 4,4,4,0.75");
  ASSERT_EQ(r.code, 1) << r.err;
  const json j = json::parse(r.out);
  expect_report_schema(j);
  EXPECT_FALSE(j["passed"].get<bool>());
  EXPECT_NEAR(j["results"][0]["residual"].get<double>(), 2.0, 1e-12);
}

TEST_F(CliTest, ParityEvenPasses) {
  const Outcome r = run("verify --check parity-even --grid 4,4,4,0.75");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LE(json::parse(r.out)["results"][0]["residual"].get<double>(), 1e-12);
}

TEST_F(CliTest, PittSweepReportsEveryBeta) {
  const Outcome r = run("inequalities --check pitt --beta-sweep 0:2:0.5 --grid 6,6,6,0.75");
  ASSERT_TRUE(r.code == 0 || r.code == 1) << r.err;
  const json j = json::parse(r.out);
  expect_report_schema(j);
  ASSERT_EQ(j["results"].size(), 5u);
  bool all = true;
  for (const auto& e : j["results"]) all = all && e["passed"].get<bool>();
  EXPECT_EQ(r.code, all ? 0 : 1);
  EXPECT_DOUBLE_EQ(j["results"][4]["config"]["beta"].get<double>(), 2.0);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  for (const char* args : {"", "frobnicate", "verify --check no-such-check", "verify --grid 4,4",
                           "verify --grid 4,4,4,-1", "inequalities --beta-sweep 2:0:1",
                           "verify --seed notanumber", "transform --kind fft"}) {
    const Outcome r = run(args);
    EXPECT_EQ(r.code, 2) << "'" << args << "': " << r.err;
    EXPECT_FALSE(r.err.empty()) << args;
  }
  EXPECT_NE(run("frobnicate").err.find("Usage"), std::string::npos);
}

TEST_F(CliTest, IoErrorsExitThree) {
  EXPECT_EQ(run("verify --config " + path("missing.json")).code, 3);
  EXPECT_EQ(run("transform --kind oclct --in " + path("missing.oct") + " --out " + path("o.oct")).code, 3);
  EXPECT_EQ(run("verify --check shift --grid 4,4,4,0.75 --out " + path("no/dir/r.json")).code, 3);
  std::ofstream(path("junk.oct")) << "not a field";
  EXPECT_EQ(run("transform --kind oclct --in " + path("junk.oct") + " --out " + path("o.oct")).code, 3);
}

TEST_F(CliTest, TransformPipeline) {
  ASSERT_EQ(run("gen-signal --grid 6,6,6,0.75 --out " + path("f.oct")).code, 0);
  const woct::SampledField3D f = woct::read_field(path("f.oct"));
  EXPECT_EQ(f.grid.size(), 216u);
  const Outcome fwd = run("transform --kind oclct --grid 6,6,6,0.75 --in " + path("f.oct") + " --out " + path("s.oct"));
  ASSERT_EQ(fwd.code, 0) << fwd.err;
  const Outcome inv = run("inverse --kind oclct --grid 6,6,6,0.75 --in " + path("s.oct") + " --out " + path("b.oct"));
  ASSERT_EQ(inv.code, 0) << inv.err;
  EXPECT_EQ(woct::read_field(path("b.oct")).grid, f.grid);
  const Outcome w = run("transform --kind woclct --grid 4,4,4,0.75 --in " + path("f4.oct") + " --out " + path("w.ocw"));
  EXPECT_EQ(w.code, 3);
  ASSERT_EQ(run("gen-signal --grid 4,4,4,0.75 --out " + path("f4.oct")).code, 0);
  ASSERT_EQ(run("transform --kind woclct --grid 4,4,4,0.75 --in " + path("f4.oct") + " --out " + path("w.ocw")).code, 0);
  const woct::WoclctResult g = woct::read_woclct(path("w.ocw"));
  EXPECT_EQ(g.values.size(), 64u * 64u);
}

TEST_F(CliTest, ConfigFileSeedAndOut) {
  {
    std::ofstream cfg(path("cfg.json"));
    cfg << R"({"signal": {"kind": "random-octonion", "seed": 5}, "checks": ["parity-even"],
               "grids": {"t": {"counts": [4, 4, 4], "spacing": [0.5, 0.5, 0.5], "origin": [-0.75, -0.75, -0.75]},
                         "window": {"counts": [5, 5, 5], "spacing": [0.5, 0.5, 0.5], "origin": [-1, -1, -1]},
                         "omega": {"counts": [3, 3, 3], "spacing": [0.7, 0.7, 0.7], "origin": [-0.7, -0.7, -0.7]},
                         "mu": {"counts": [4, 4, 4], "spacing": [0.5, 0.5, 0.5], "origin": [-0.75, -0.75, -0.75]}}})";
  }
  const Outcome r = run("verify --config " + path("cfg.json") + " --seed 42 --out " + path("r.json"));
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const json j = json::parse(read(path("r.json")));
  expect_report_schema(j);
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["config"]["signal"]["kind"], "random-octonion");
  EXPECT_EQ(j["config"]["grids"]["omega"]["counts"][0], 3);
}

TEST_F(CliTest, ReportMergesVerdicts) {
  ASSERT_EQ(run("verify --check shift --grid 4,4,4,0.75 --out " + path("a.json")).code, 0);
  ASSERT_EQ(run("verify --check parity --grid 4,4,4,0.75 --out " + path("b.json")).code, 1);
  const Outcome ok = run("report --in " + path("a.json"));
  EXPECT_EQ(ok.code, 0) << ok.err;
  const Outcome merged = run("report --in " + path("a.json") + " --in " + path("b.json"));
  EXPECT_EQ(merged.code, 1);
  const json j = json::parse(merged.out);
  expect_report_schema(j, false);
  EXPECT_EQ(j["results"].size(), 2u);
  EXPECT_EQ(run("report --in " + path("none.json")).code, 3);
}

}  // namespace
