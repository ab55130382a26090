#include <gtest/gtest.h>
#include <nlohmann/json.hpp>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace cppforge::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cppforge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int shell_exit(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, VerifyPassingInstance) {
  const auto r = invoke({"verify", "--p", "3", "--k", "1", "--n", "2", "--a", "[0,1]", "--family", "thm2_2"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["results"][0]["verdict"]["verdict"], "pass");
  EXPECT_EQ(j["exit_code"], 0);
  EXPECT_EQ(r.out.find("timing_ms"), std::string::npos);
}

TEST(Cli, VerifyFailingInstanceHasCollision) {
  const auto r = invoke({"verify", "--p", "3", "--k", "1", "--n", "2", "--a", "[1,0]"});
  EXPECT_EQ(r.code, kExitFail);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["results"][0]["verdict"]["verdict"], "fail");
  EXPECT_TRUE(j["results"][0]["verdict"]["witness"].contains("collision"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"verify", "--p", "4", "--k", "1", "--n", "2", "--a", "[0,1]"}).code, kExitUsage);
  EXPECT_EQ(invoke({"theorem", "9.9"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--p", "3", "--k", "1", "--n", "2", "--a", "[0,1]", "--family", "nope"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"verify", "--p", "3", "--k", "1", "--n", "2", "--a", "[7,1]"}).code, kExitUsage);
  EXPECT_EQ(invoke({"theorem", "2.2", "--grid", "p in {3,"}).code, kExitUsage);
  EXPECT_EQ(invoke({"sweep", "--family", "thm2_2"}).code, kExitUsage);
}

TEST(Cli, BudgetExceeded) {
  const auto r = invoke({"family", "--p", "7", "--k", "1", "--n", "6", "--family", "thm2_2", "--budget", "1000"});
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_EQ(nlohmann::json::parse(r.out)["exit_code"], 3);
}

TEST(Cli, TheoremOneTwo) {
  const auto r = invoke({"theorem", "1.2", "--grid", "p=3, k=1, n=4, b in GF(3)*"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["results"].size(), 2u);
}

TEST(Cli, SweepMatchesFamilyAndIsDeterministic) {
  const std::vector<std::string> args = {"sweep", "--family", "thm2_3", "--grid", "p in {3,5}, k=1, n | p-1"};
  const auto a = invoke(args);
  auto with_jobs = args;
  with_jobs.insert(with_jobs.end(), {"--jobs", "3"});
  const auto b = invoke(with_jobs);
  EXPECT_EQ(a.code, kExitPass) << a.err;
  EXPECT_EQ(b.code, kExitPass);
  auto ja = nlohmann::json::parse(a.out);
  auto jb = nlohmann::json::parse(b.out);
  ja["config"].erase("jobs");
  jb["config"].erase("jobs");
  EXPECT_EQ(ja.dump(), jb.dump());
  EXPECT_EQ(a.out, invoke(args).out);
}

TEST(Cli, TimingFlagAddsTimings) {
  const auto r =
      invoke({"verify", "--p", "3", "--k", "1", "--n", "2", "--a", "[0,1]", "--family", "thm2_2", "--timing"});
  EXPECT_NE(r.out.find("timing_ms"), std::string::npos);
}

TEST(CliBinary, ExitCodesAndByteIdenticalReports) {
  const std::string bin = CPPFORGE_BINARY;
  const auto dir = std::filesystem::temp_directory_path() / "cppforge_cli_test";
  std::filesystem::create_directories(dir);
  const auto r1 = (dir / "r1.json").string();
  const auto r2 = (dir / "r2.json").string();
  const std::string verify = bin + " verify --p 3 --k 1 --n 2 --a '[0,1]' --family thm2_2 --out ";
  EXPECT_EQ(shell_exit(verify + r1), 0);
  EXPECT_EQ(shell_exit(verify + r2), 0);
  std::ifstream f1(r1), f2(r2);
  std::stringstream s1, s2;
  s1 << f1.rdbuf();
  s2 << f2.rdbuf();
  EXPECT_FALSE(s1.str().empty());
  EXPECT_EQ(s1.str(), s2.str());

  EXPECT_EQ(shell_exit(bin + " verify --p 3 --k 1 --n 2 --a '[1,0]' >/dev/null"), 1);
  EXPECT_EQ(shell_exit(bin + " verify --p 4 --k 1 --n 2 --a '[0,1]' >/dev/null 2>&1"), 2);
  EXPECT_EQ(shell_exit(bin + " theorem 9.9 >/dev/null 2>&1"), 2);
  EXPECT_EQ(shell_exit("CPPFORGE_BUDGET=1000 " + bin + " family --p 7 --k 1 --n 6 --family thm2_2 >/dev/null"), 3);
  EXPECT_EQ(shell_exit("CPPFORGE_BUDGET=abc " + bin + " theorem 1.2 >/dev/null 2>&1"), 2);
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace cppforge::cli
