#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "muxfec/serialize.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("muxfec_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  CliResult run(const std::string& args, const std::string& env = "") const {
    const std::string err_path = path("stderr.txt");
    const std::string cmd = env + " '" MUXFEC_CLI "' " + args + " 2>'" + err_path + "'";
    CliResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_path);
    return r;
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, BuildIsDeterministic) {
  const auto a = run("build --tv 12 --tu 6 --b 4 --n 2 --seed 1 --out " + path("a.json"));
  const auto b = run("build --tv 12 --tu 6 --b 4 --n 2 --seed 1 --out " + path("b.json"));
  ASSERT_EQ(a.exit_code, 0) << a.err;
  ASSERT_EQ(b.exit_code, 0) << b.err;
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  const auto spec = muxfec::parse_code_spec(slurp(path("a.json")));
  EXPECT_EQ(spec.params.n, 14u);
  EXPECT_EQ(spec.G.codes(), testing_support::example_code().G.codes());
  // Seed from the environment.
  const auto c = run("build --tv 12 --tu 6 --b 4 --n 2 --out " + path("c.json"), "MUXFEC_SEED=1");
  ASSERT_EQ(c.exit_code, 0);
  EXPECT_EQ(slurp(path("c.json")), slurp(path("a.json")));
}

TEST_F(CliTest, BuildToStdout) {
  const auto r = run("build --tv 12 --tu 6 --b 4 --n 3 --seed 1");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["n"], 13);
}

TEST_F(CliTest, UsageErrors) {
  const auto r = run("build --tv 10 --tu 6 --b 4 --n 2");
  EXPECT_EQ(r.exit_code, 1);
  const auto err = json::parse(r.err);
  EXPECT_EQ(err["error"], "usage");
  EXPECT_NE(err["message"].get<std::string>().find("T_v > T_u + B"), std::string::npos);
  EXPECT_EQ(run("build --tv 12").exit_code, 1);
  EXPECT_EQ(run("frobnicate").exit_code, 1);
  EXPECT_EQ(run("verify " + path("missing.json")).exit_code, 1);
  EXPECT_EQ(run("rates --b 9 --n 3 --tv-range 25:20 --tu-range 10:15").exit_code, 1);
  EXPECT_EQ(run("build --tv 12 --tu 6 --b 4 --n 2", "MUXFEC_SEED=abc").exit_code, 1);
}

TEST_F(CliTest, VerifyPassesAndReportsCounterexample) {
  ASSERT_EQ(run("build --tv 12 --tu 6 --b 4 --n 2 --seed 1 --out " + path("code.json")).exit_code, 0);
  const auto ok = run("verify " + path("code.json"));
  EXPECT_EQ(ok.exit_code, 0) << ok.err;
  EXPECT_EQ(json::parse(ok.out)["pass"], true);
  EXPECT_EQ(json::parse(ok.out)["patterns_checked"], 68);

  // A wider window only admits fewer patterns on 14 slots.
  EXPECT_EQ(run("verify --w 20 " + path("code.json")).exit_code, 0);

  // Zero the first entry of the left block whose loss breaks the code.
  auto j = json::parse(slurp(path("code.json")));
  const auto spec = muxfec::parse_code_spec(j.dump());
  const std::size_t cols = spec.G.cols();
  bool planted = false;
  for (std::size_t idx = 0; idx < j["matrix"]["entries"].size() && !planted; ++idx) {
    const std::size_t i = idx / cols, c = idx % cols;
    if (c >= 11 || spec.G(i, c).is_zero() || i == c) continue;
    auto g = spec.G;
    g(i, c) = muxfec::FieldElement::zero(spec.field);
    if (muxfec::verify_achievable(g, spec.params.deadlines(), spec.params.channel()).pass) continue;
    j["matrix"]["entries"][idx] = 0;
    planted = true;
  }
  ASSERT_TRUE(planted);
  std::ofstream(path("broken.json")) << j.dump(2);
  const auto bad = run("verify " + path("broken.json") + " --report " + path("report.json"));
  EXPECT_EQ(bad.exit_code, 2);
  const auto report = json::parse(bad.out);
  EXPECT_EQ(report["pass"], false);
  EXPECT_FALSE(report["counterexample"]["pattern"].is_null());
  EXPECT_EQ(json::parse(slurp(path("report.json"))), report);
}

TEST_F(CliTest, RatesTable) {
  const auto r = run("rates --b 9 --n 3 --tv-range 20:25 --tu-range 10:15 --csv");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, row20;
  std::getline(lines, header);
  std::getline(lines, row20);
  EXPECT_EQ(header, "T_v,10,11,12,13,14,15,capacity_v,mux_sum_rate,case_m_small_bound");
  // Only T_u = 10 is populated at T_v = 20.
  EXPECT_EQ(row20.rfind("20,12.55,,,,,,", 0), 0u) << row20;
  const auto exact = run("rates --b 4 --n 2 --tv-range 12 --tu-range 6 --json --exact");
  ASSERT_EQ(exact.exit_code, 0);
  EXPECT_EQ(json::parse(exact.out)["cells"][0]["mux_sum_rate"], "5/7");
  EXPECT_EQ(json::parse(exact.out)["cells"][0]["gain_percent"], "2200/203");
}

TEST_F(CliTest, SimulateAndReplay) {
  ASSERT_EQ(run("build --tv 12 --tu 6 --b 4 --n 2 --seed 1 --out " + path("code.json")).exit_code, 0);
  const auto r = run("simulate " + path("code.json") + " --slots 2000 --seed 3 --trace " + path("trace.txt"));
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["pass"], true);
  const auto again = run("simulate " + path("code.json") + " --slots 2000 --seed 3 --replay " + path("trace.txt"));
  ASSERT_EQ(again.exit_code, 0) << again.err;
  EXPECT_EQ(again.out, r.out);
  const auto burst = run("simulate " + path("code.json") + " --slots 200 --burst-at 50");
  EXPECT_EQ(burst.exit_code, 0) << burst.err;
  EXPECT_EQ(json::parse(burst.out)["erased_slots"], 4);
}

TEST_F(CliTest, DumpParts) {
  ASSERT_EQ(run("build --tv 12 --tu 6 --b 4 --n 2 --seed 1 --out " + path("code.json")).exit_code, 0);
  const auto merged = json::parse(run("dump " + path("code.json")).out);
  EXPECT_EQ(merged["rows"], 10);
  EXPECT_EQ(merged["cols"], 14);
  const auto left = json::parse(run("dump " + path("code.json") + " --part left-block").out);
  EXPECT_EQ(left["rows"], 10);
  EXPECT_EQ(left["cols"], 11);
  EXPECT_EQ(json::parse(run("dump " + path("code.json") + " --part g2").out)["cols"], 9);
  EXPECT_EQ(run("dump " + path("code.json") + " --part nope").exit_code, 1);
}
