#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "app.hpp"
#include "json.hpp"

namespace bsy::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("bsy_cli_test_" + name)).string();
}

TEST(Cli, ZetaCsv) {
  const Outcome o = invoke({"zeta", "--sigma", "2", "--t", "0"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("sigma,t,re,im,abs_error"), std::string::npos);
  EXPECT_NE(o.out.find("1.6449340668482"), std::string::npos);
}

TEST(Cli, ZetaJsonHardy) {
  const Outcome o = invoke({"--format", "json", "zeta", "--t", "20", "--hardy"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto doc = nlohmann::json::parse(o.out);
  EXPECT_NEAR(doc["Z"].get<double>(), 1.1478424121854349, 1e-10);
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"zeta", "--sigma", "2", "--t", "0", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"zeta", "--sigma", "2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--format", "xml", "zeta", "--t", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--quad-tol", "-1", "zeta", "--t", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"integral", "scan", "--tmax", "40", "--points", "3", "--out", temp_path("x.csv")}).code,
            kExitUsage);
}

TEST(Cli, ComputationalErrorsExitTwoWithJson) {
  const Outcome o = invoke({"zeta", "--sigma", "1", "--t", "0"});
  EXPECT_EQ(o.code, kExitComputation);
  const auto doc = nlohmann::json::parse(o.err);
  EXPECT_EQ(doc["error"], "PoleAt1");
}

TEST(Cli, ZeroFileWorkflow) {
  const std::string file = temp_path("zeros.txt");
  const Outcome found = invoke({"zeros", "find", "--max-t", "40", "--out", file});
  ASSERT_EQ(found.code, kExitOk) << found.err;
  EXPECT_NE(found.out.find("6,40,true"), std::string::npos) << found.out;
  EXPECT_EQ(invoke({"zeros", "verify", "--in", file}).code, kExitOk);

  const Outcome integral = invoke({"integral", "--T", "20", "--zeros", file});
  ASSERT_EQ(integral.code, kExitOk) << integral.err;
  EXPECT_NE(integral.out.find("20,0.00666828850"), std::string::npos) << integral.out;

  std::ofstream(file, std::ios::app) << "1.0\n";
  const Outcome bad = invoke({"zeros", "verify", "--in", file});
  EXPECT_EQ(bad.code, kExitComputation);
  EXPECT_EQ(nlohmann::json::parse(bad.err)["error"], "NotAscending");
  std::filesystem::remove(file);
}

TEST(Cli, ResonatorBuildAndCheck) {
  const std::string table = temp_path("table.txt");
  const Outcome built = invoke({"resonator", "build", "--mu", "1", "--N", "100", "--override", "--A", "2",
                                "--B", "30", "--L", "1", "--out", table});
  ASSERT_EQ(built.code, kExitOk) << built.err;
  EXPECT_NE(built.out.find("25,95"), std::string::npos) << built.out;

  const Outcome checked = invoke({"resonator", "check", "--mu", "1", "--N", "100", "--h", "0.1",
                                  "--override", "--A", "2", "--B", "30", "--L", "1"});
  ASSERT_EQ(checked.code, kExitOk) << checked.err;
  const auto doc = nlohmann::json::parse(checked.out);
  EXPECT_GT(doc["ratio_plus"].get<double>(), 0.0);
  EXPECT_LT(doc["ratio_minus"].get<double>(), 0.0);

  const Outcome mv = invoke({"mv", "exact", "--table", table, "--T", "1000"});
  ASSERT_EQ(mv.code, kExitOk) << mv.err;
  EXPECT_NEAR(nlohmann::json::parse(mv.out)["ratio"].get<double>(), 1.0, 0.01);
  std::filesystem::remove(table);
}

TEST(Cli, ArgumentCsv) {
  const Outcome o = invoke({"arg", "s", "--t", "50"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(o.out.rfind("t,stat,normalized\n", 0), 0u);
}

TEST(Cli, ConfigFileFeedsPrecision) {
  const std::string conf = temp_path("bad.conf");
  std::ofstream(conf) << "quad_tol = nope\n";
  EXPECT_EQ(invoke({"--config", conf, "zeta", "--t", "1"}).code, kExitUsage);
  std::ofstream(conf) << "format = json\n";
  const Outcome o = invoke({"--config", conf, "zeta", "--t", "1"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_NO_THROW((void)nlohmann::json::parse(o.out));
  std::filesystem::remove(conf);
}

TEST(Cli, ReportSingleSuite) {
  const Outcome o = invoke({"report", "resonator-exactness"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  const auto doc = nlohmann::json::parse(o.out);
  EXPECT_EQ(doc["criterion_id"], "resonator-exactness");
  EXPECT_TRUE(doc["pass"].get<bool>());
}

}  // namespace
}  // namespace bsy::cli
