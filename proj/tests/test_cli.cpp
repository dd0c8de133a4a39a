#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(FLAGPAR_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), p)) r.out += buf.data();
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string scenario(const std::string& name) { return std::string(FLAGPAR_SCENARIO_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("flagpar_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, PrintIsIdempotent) {
  for (const auto& f : {"limit_ordinal_couple.scn", "rational_borel.scn", "su1_minimal.scn", "so6_isotropic_plane.scn"}) {
    Result once = run("print --scenario " + scenario(f));
    ASSERT_EQ(once.code, 0) << f;
    Result twice = run("print --scenario " + temp_file(f, once.out));
    EXPECT_EQ(twice.code, 0);
    EXPECT_EQ(once.out, twice.out) << f;
  }
}

TEST(Cli, RunHolds) {
  for (const auto& f : {"rational_borel.scn", "so6_isotropic_plane.scn", "su1_minimal.scn"}) {
    Result r = run("run --scenario " + scenario(f));
    EXPECT_EQ(r.code, 0) << f << "\n" << r.out;
    EXPECT_NE(r.out.find("all checks hold"), std::string::npos);
  }
}

TEST(Cli, RecordsAreJsonLines) {
  Result r = run("run --scenario " + scenario("rational_borel.scn") + " --emit record");
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j.at("verdict"), "holds");
    EXPECT_TRUE(j.contains("check") && j.contains("level") && j.contains("witness") && j.contains("seconds"));
    ++n;
  }
  EXPECT_EQ(n, 24);
}

TEST(Cli, UsageAndParseErrorsExitTwo) {
  EXPECT_EQ(run("run --scenario /nonexistent/file.scn").code, 2);
  EXPECT_EQ(run("run --scenario " + temp_file("bad.scn", "(flagpar-scenario 1 (name x")).code, 2);
  EXPECT_EQ(run("run --scenario " + temp_file("unknown.scn", "(flagpar-scenario 1 (name x) (colour red))")).code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("check --scenario " + scenario("rational_borel.scn") + " --taut --solvable").code, 2);
  EXPECT_EQ(run("psi-b --b 'matrix 1 1 1/2' --x 'matrix 2 2 1 0 0 1'").code, 2);
}

TEST(Cli, SingleVerdicts) {
  Result r = run("check --scenario " + scenario("rational_borel.scn") + " --level 3 --solvable");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("derived dims 6,3,0"), std::string::npos);
  EXPECT_EQ(run("check --scenario " + scenario("so6_isotropic_plane.scn") + " --taut").code, 0);
}

TEST(Cli, Calculators) {
  Result p = run("psi-b --b 'matrix 2 2 1/2 0 0 1/3' --x 'matrix 2 2 2 0 0 3'");
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out, "5/2\n");
  EXPECT_EQ(run("voiculescu --c 0:1/2,1:1/2 --n 3").code, 0);
  Result v = run("voiculescu --c 0:2,1:-1 --n 3");
  EXPECT_EQ(v.code, 1);
  EXPECT_EQ(v.out, "rejected\n");
}

TEST(Cli, InduceAndMan) {
  Result i = run("induce --form sl --window 3 --degree 4 --sigma 1,0");
  EXPECT_EQ(i.code, 0);
  EXPECT_EQ(i.out.rfind("graded dims 1 3 6 10 15\n", 0), 0u);
  Result m = run("man --form 'su(1,inf)' --scenario " + scenario("su1_minimal.scn") + " --levels 2..3 --emit record");
  EXPECT_EQ(m.code, 0);
  EXPECT_EQ(m.out.find("\"fails\""), std::string::npos);
}

TEST(Cli, LeviBlocks) {
  Result r = run("levi --scenario " + scenario("so6_isotropic_plane.scn"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("block 0 sl order 2"), std::string::npos);
}

TEST(Cli, SuiteOracle) {
  Result r = run("suite oracle");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(run("suite nonsense").code, 2);
}
