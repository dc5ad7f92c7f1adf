#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "schurpar/cli.hpp"

using namespace schurpar;

namespace {

struct CliRun {
  int rc;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "schurpar");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {rc, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Symbol) {
  const CliRun r = run({"symbol", "-6", "13"});
  EXPECT_EQ(r.rc, kExitOk);
  EXPECT_EQ(r.out, "-1\n");
  EXPECT_EQ(run({"symbol", "-6", "5"}).out, "1\n");
}

TEST(Cli, Schur) {
  const CliRun r = run({"schur", "--n", "5"});
  EXPECT_EQ(r.rc, kExitOk);
  EXPECT_EQ(r.out, "2\n");
  const CliRun big = run({"schur", "--n", "3000"});
  EXPECT_EQ(big.rc, kExitUsage);
  EXPECT_EQ(big.err.rfind("error:", 0), 0u);
}

TEST(Cli, Factor) {
  EXPECT_EQ(run({"factor", "9991"}).out, "9991 = 97 * 103\n");
  EXPECT_EQ(run({"factor", "0"}).rc, kExitUsage);
}

TEST(Cli, VerifyForms216PrintsJson) {
  const CliRun r = run({"verify", "--suite", "forms216"});
  EXPECT_EQ(r.rc, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j[0]["name"], "forms216");
  EXPECT_EQ(j[0]["status"], "pass");
  EXPECT_EQ(j[0]["checked"], 3);
}

TEST(Cli, VerifyFailureExitCode) {
  const CliRun r = run({"verify", "--suite", "congruence8", "--limit", "10", "--modulus-offset", "7"});
  EXPECT_EQ(r.rc, kExitVerificationFailed);
  EXPECT_EQ(nlohmann::json::parse(r.out)[0]["status"], "fail");
}

TEST(Cli, UsageErrors) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"--bogus"}, {"symbol", "-6"}, {"verify", "--suite", "nope"}, {"schur"}, {"classify", "--m", "99"}, {}}) {
    const CliRun r = run(args);
    EXPECT_EQ(r.rc, kExitUsage) << (args.empty() ? "" : args[0]);
    EXPECT_EQ(r.err.rfind("error:", 0), 0u) << r.err;
  }
}

TEST(Cli, ClassifyAndForms) {
  EXPECT_EQ(run({"classify", "--prime", "73"}).rc, kExitOk);
  EXPECT_NE(run({"classify", "--prime", "73"}).out.find("S3"), std::string::npos);
  EXPECT_EQ(run({"forms", "--disc", "-216"}).rc, kExitOk);
  EXPECT_NE(run({"forms", "--disc", "-216"}).out.find("5,-2,11"), std::string::npos);
  EXPECT_EQ(run({"repcount", "--n", "35", "--form", "5,2,11"}).out, "2\n");
}

TEST(Cli, CensusWritesCsvAndIsReproducible) {
  const auto path = std::filesystem::temp_directory_path() / "schurpar_cli_census.csv";
  const CliRun a = run({"census", "--limit", "3000", "--method", "both", "--out", path.string()});
  ASSERT_EQ(a.rc, kExitOk) << a.err;
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "x,odd_count,ratio_low,ratio_high");
  std::filesystem::remove(path);
  const CliRun b = run({"census", "--limit", "3000", "--threads", "3"});
  const CliRun c = run({"census", "--limit", "3000", "--threads", "1"});
  EXPECT_EQ(b.rc, kExitOk);
  EXPECT_EQ(b.out, c.out);
}

TEST(Cli, ByteIdenticalRepeats) {
  const std::vector<std::string> args{"verify", "--suite", "lemma1", "--limit", "500"};
  EXPECT_EQ(run(args).out, run(args).out);
}
