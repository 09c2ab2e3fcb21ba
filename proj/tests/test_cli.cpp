// Runs the installed-style executable as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
  int status = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(BIKEHIKER_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::map<std::string, std::string> keys(const std::string& out) {
  std::map<std::string, std::string> kv;
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line)) {
    const auto colon = line.find(": ");
    if (colon != std::string::npos) kv[line.substr(0, colon)] = line.substr(colon + 2);
  }
  return kv;
}

std::string fixture(const char* name) { return std::string(BIKEHIKER_FIXTURE_DIR) + "/" + name; }

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::path(::testing::TempDir()) / "bikehiker_cli";
  std::filesystem::create_directories(dir);
  return dir / name;
}

TEST(Cli, CheckFixtures) {
  CliResult r = run("--porcelain check " + fixture("m1.mat"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(keys(r.out)["optimal"], "true");

  r = run("--porcelain check " + fixture("m2.mat"));
  EXPECT_EQ(r.status, 1);
  auto kv = keys(r.out);
  EXPECT_EQ(kv["optimal"], "false");
  EXPECT_EQ(kv["failing_boundary"], "3");
  EXPECT_EQ(kv["failing_boundary_0based"], "2");
  EXPECT_EQ(kv["failing_word"], "bbbaaa");

  r = run("--porcelain check --no-skip-rule --witness " + fixture("m1.mat"));
  kv = keys(r.out);
  EXPECT_EQ(kv["boundaries_checked"], "5");
  EXPECT_EQ(kv["word_3"], "aaabbb");
  EXPECT_EQ(kv["plan_3"].empty(), false);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("--help").status, 0);
  EXPECT_EQ(run("check /nonexistent.mat").status, 2);
  EXPECT_EQ(run("gen --kind spiral --n 3 --k 1").status, 2);
  EXPECT_EQ(run("gen --kind cyclic --n 3 --k 4").status, 2);
  EXPECT_EQ(run("enum --n 8 --k 2").status, 2);
  EXPECT_EQ(run("reduce " + fixture("m2.mat") + " -o " + scratch("never.mat").string()).status, 2);

  const auto bad = scratch("bad.mat");
  std::ofstream(bad) << "2 2\n1 0\n0 x\n";
  EXPECT_EQ(run("check " + bad.string()).status, 2);
  const auto ragged = scratch("ragged.mat");
  std::ofstream(ragged) << "2 2\n1 1\n0 1\n";
  const CliResult r = run("--porcelain check " + ragged.string());
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(keys(r.out)["reason"], "not_uniform");
}

TEST(Cli, GenCheckRoundTrip) {
  for (const char* kind : {"cyclic", "transpose-cyclic", "circulant"})
    for (int n = 1; n <= 30; ++n)
      for (int k = 1; k <= n; ++k) {
        const auto path = scratch("round.mat");
        const std::string args = std::string("gen --kind ") + kind + " --n " + std::to_string(n) + " --k " +
                                 std::to_string(k) + " -o " + path.string();
        ASSERT_EQ(run(args).status, 0) << args;
        ASSERT_EQ(run("--porcelain check " + path.string()).status, 0) << args;
      }
  for (auto [n, k] : {std::pair{4, 2}, {6, 4}, {9, 6}, {5, 5}, {7, 3}})
    for (int r = 1; r <= 3; ++r) {
      const auto path = scratch("block.mat");
      const std::string args = "gen --kind block --n " + std::to_string(n) + " --k " + std::to_string(k) + " --r " +
                               std::to_string(r) + " -o " + path.string();
      ASSERT_EQ(run(args).status, 0) << args;
      ASSERT_EQ(run("check " + path.string()).status, 0) << args;
    }
}

TEST(Cli, GenToStdout) {
  const CliResult r = run("gen --kind cyclic --n 3 --k 1");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "3 3\n1 0 0\n0 1 0\n0 0 1\n");
}

TEST(Cli, ReduceAndStats) {
  const auto out = scratch("reduced.mat");
  CliResult r = run("--porcelain reduce " + fixture("t117.mat") + " -o " + out.string());
  EXPECT_EQ(r.status, 0);
  auto kv = keys(r.out);
  EXPECT_EQ(kv["handovers_removed"], "12");
  EXPECT_EQ(kv["rides_before"], "47");
  EXPECT_EQ(kv["rides_after"], "35");

  r = run("--porcelain stats " + out.string());
  kv = keys(r.out);
  EXPECT_EQ(kv["total_rides"], "35");
  EXPECT_EQ(kv["excess_handovers"], "0");

  r = run("--porcelain stats --plan " + fixture("t117.mat"));
  kv = keys(r.out);
  EXPECT_EQ(kv["total_rides"], "47");
  EXPECT_EQ(kv["excess_handovers"], "12");
  EXPECT_EQ(kv["rides_traveller_4"], "5");
  EXPECT_EQ(kv["bikes"], "7");
  EXPECT_FALSE(kv["mounts_bike_0"].empty());
}

TEST(Cli, Simulate) {
  CliResult r = run("--porcelain sim " + fixture("m2.mat"));
  EXPECT_EQ(r.status, 0);
  auto kv = keys(r.out);
  EXPECT_EQ(kv["stall_free"], "false");
  EXPECT_EQ(kv["first_stall_post"], "3");
  EXPECT_EQ(kv["first_stall_wait"], "1/2");
  EXPECT_EQ(kv["first_stall_ride_ordinal"], "3");

  const auto trace = scratch("trace.csv");
  r = run("--porcelain sim --walk 1 --cycle 3/2 --policy plan --trace " + trace.string() + " " +
          fixture("m1.mat"));
  EXPECT_EQ(r.status, 0);
  kv = keys(r.out);
  EXPECT_EQ(kv["stall_free"], "true");
  EXPECT_EQ(kv["makespan"], "5/1");
  EXPECT_EQ(kv["simultaneous_finish"], "true");
  std::ifstream in(trace);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "time,traveller,post,event,bike");

  EXPECT_EQ(run("sim --cycle 1/2 " + fixture("m1.mat")).status, 2);
  EXPECT_EQ(run("sim --policy plan " + fixture("m2.mat")).status, 2);
}

TEST(Cli, EnumAndDet) {
  CliResult r = run("--porcelain enum --n 4 --k 2 --cross-validate");
  EXPECT_EQ(r.status, 0);
  auto kv = keys(r.out);
  EXPECT_EQ(kv["total_uniform"], "90");
  EXPECT_EQ(kv["nonoptimal_count"], "0");
  EXPECT_EQ(kv["mismatches"], "0");

  r = run("--porcelain det --n 5 --k 2");
  kv = keys(r.out);
  EXPECT_EQ(kv["determinant"].find('2') != std::string::npos, true);
  r = run("--porcelain det --n 6 --k 3");
  EXPECT_EQ(keys(r.out)["determinant"], "0");
}

TEST(Cli, DeterministicOutput) {
  for (const std::string& args : std::vector<std::string>
       {"--porcelain check --witness " + fixture("t117.mat"), "check --witness " + fixture("m2.mat"),
        "--porcelain sim " + fixture("t117.mat"), "stats --plan " + fixture("m_prime_11_7.mat"),
        "--porcelain enum --n 5 --k 2 --max-examples 3", "gen --kind transpose-cyclic --n 11 --k 7"}) {
    const CliResult a = run(args);
    const CliResult b = run(args);
    EXPECT_EQ(a.status, b.status) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty()) << args;
  }
}

}  // namespace
