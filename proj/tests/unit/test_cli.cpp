#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::string& args) {
  const auto errfile = std::filesystem::temp_directory_path() / ("erlab_cli_err_" + std::to_string(::getpid()));
  const std::string cmd = std::string(ERLAB_CLI_PATH) + " " + args + " 2>" + errfile.string();
  FILE* p = ::popen(cmd.c_str(), "r");
  CliRun r{-1, {}, {}};
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream e(errfile);
  r.err.assign(std::istreambuf_iterator<char>(e), {});
  std::filesystem::remove(errfile);
  return r;
}

std::string data(const std::string& name) { return std::string(ERLAB_TEST_DATA) + "/" + name; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, Enumerate) {
  EXPECT_TRUE(contains(run("enumerate --set -n 5 -k 2 --count-only").out, "10"));
  EXPECT_TRUE(contains(run("enumerate --vs -q 2 -n 4 -k 2 --count-only").out, "35"));
  EXPECT_TRUE(contains(run("enumerate --perm -n 3 --count-only").out, "6"));
  EXPECT_EQ(run("enumerate --set --vs -n 3 -k 1").code, 2);
}

TEST(Cli, CountFiles) {
  const CliRun star = run("count " + data("star_5_2.fam") + " -r 3 --oracle");
  EXPECT_EQ(star.code, 0);
  EXPECT_TRUE(contains(star.out, "\"count\": \"81\""));
  EXPECT_TRUE(contains(star.out, "\"oracle_checked\": true"));
  EXPECT_TRUE(contains(run("count " + data("full_5_2.fam") + " -r 3").out, "\"120\""));
  EXPECT_TRUE(contains(run("count " + data("planes.fam") + " -r 3").out, "\"9\""));
  EXPECT_TRUE(contains(run("count " + data("perms.fam") + " -r 2").out, "\"4\""));
}

TEST(Cli, ParseErrorsExitTwoWithLine) {
  const CliRun bad = run("count " + data("malformed.fam") + " -r 3");
  EXPECT_EQ(bad.code, 2);
  EXPECT_TRUE(contains(bad.err, "line 3"));
  EXPECT_EQ(run("count /nonexistent/file.fam -r 3").code, 2);
  EXPECT_EQ(run("nosuchcommand").code, 2);
}

TEST(Cli, CensusCsv) {
  const CliRun r = run("census --set -n 5 -k 2 -t 1 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "M,N0,N1,N2,extremal,eq1_sign,eq1_lo,eq1_hi"));
  EXPECT_TRUE(contains(r.out, "15,4,3,1,"));
}

TEST(Cli, Certify) {
  EXPECT_TRUE(contains(run("certify --perm --which perm-bound -n 19 --format csv").out, "positive"));
  const CliRun neg = run("certify --vs --which vector-margin -q 2 -n 9 -k 4 --format json");
  EXPECT_TRUE(contains(neg.out, "negative"));
}

TEST(Cli, ConstructRoundTrip) {
  const auto tmp = std::filesystem::temp_directory_path() / ("erlab_v2_" + std::to_string(::getpid()) + ".fam");
  const CliRun c = run("construct --config " + data("v2.json") + " --output " + tmp.string());
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_TRUE(contains(c.out, "\"size\": 13"));
  const CliRun n = run("count " + tmp.string() + " -r 2 --oracle");
  EXPECT_EQ(n.code, 0) << n.err;
  EXPECT_TRUE(contains(n.out, "\"vertices\": 13"));
  EXPECT_TRUE(contains(n.out, "\"oracle_checked\": true"));
  std::filesystem::remove(tmp);
  const CliRun u = run("construct --config " + data("union_sets.json") + " --format csv");
  EXPECT_TRUE(contains(u.out, "multiplicity,members"));
}

TEST(Cli, DomainAndCapacityCodes) {
  const CliRun d = run("construct --json '{\"kind\":\"v2\",\"q\":2,\"n\":4,\"k\":2,\"t\":1,\"s\":4}'");
  EXPECT_EQ(d.code, 2);
  EXPECT_TRUE(contains(d.err, "domain error"));
  const CliRun c = run("search exhaustive --set -n 7 -k 2 -t 1 -r 3");
  EXPECT_EQ(c.code, 3);
  EXPECT_TRUE(contains(c.err, "capacity error"));
}

TEST(Cli, OptAndCompare) {
  const CliRun o = run("opt -r 7 --brute --format csv");
  EXPECT_TRUE(contains(o.out, "7,12,"));
  EXPECT_TRUE(contains(o.out, "true"));
  const CliRun s = run("compare star-swap --set -n 15 -k 3 -t 2 -r 6 --centres \"1,2;1,3\" --to 4,5 --format json");
  EXPECT_EQ(s.code, 0) << s.err;
  EXPECT_TRUE(contains(s.out, "3/2"));
}

TEST(Cli, SearchJsonUsesZeroBasedIndices) {
  const CliRun r = run("search exhaustive --set -n 4 -k 2 -t 1 -r 2 --prune");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "\"max_count\": \"8\""));
}
