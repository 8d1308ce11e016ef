#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sys/wait.h>

#include "fixtures.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(ALN_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  std::array<char, 512> buf{};
  while (auto n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string kb(const std::string& name) {
  return aln::testing::data_path("kb/" + name);
}

}  // namespace

TEST(Cli, AbduceTwoCandidates) {
  auto r = run("abduce --kb " + kb("two-candidates.kb") + " --c c1 --d d");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "H = (and A A1)\npenalty = 2\n");
  EXPECT_EQ(run("abduce --kb " + kb("two-candidates.kb") + " --c c1 --d d").out, r.out);
}

TEST(Cli, AbduceTboxStep5) {
  auto r = run("abduce --kb " + kb("small-abduction.kb") + " --c c --d d --tbox-step5");
  EXPECT_EQ(r.out, "H = A1\npenalty = 1\n");
}

TEST(Cli, ClassifyFullMatch) {
  auto r = run("classify --kb " + kb("computers.kb") + " --sup sup --dem dem");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "partial\n");
}

TEST(Cli, Contract) {
  auto r = run("contract --kb " + kb("computers.kb") + " --c dem1 --d sup4");
  EXPECT_EQ(r.out,
            "G = (all hasMonitor CRTmonitor)\n"
            "K = (and PC (all hasMonitor Monitor))\n"
            "penalty = 1\n");
}

TEST(Cli, Normalize) {
  auto r = run("normalize --kb " + kb("computers.kb") +
               " --concept '(and Server (all hasCPU Intel))'");
  EXPECT_EQ(r.out,
            "(and Computer (at-least 2 hasCPU) (at-least 1 hasStorageDevice) "
            "(all hasCPU (and Intel (not AMD))))\n");
}

TEST(Cli, RankTableJsonAndBaseline) {
  auto offers = aln::testing::data_path("kb/monitor-demands.kb");
  auto r = run("rank --kb " + kb("computers.kb") + " --request sup4 --offers " + offers);
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out,
            "rank\tid\tclass\tpenalty\texplanation\n"
            "1\tdem1\tpartial\t1\tG=(all hasMonitor CRTmonitor) K=(and PC (all hasMonitor Monitor))\n"
            "2\tdem2\tpartial\t3\tG=(and (at-most 0 hasMonitor) (all hasMonitor BOTTOM)) K=PC\n");
  auto j = run("rank --kb " + kb("computers.kb") + " --request sup4 --offers " + offers +
               " --format json");
  EXPECT_NE(j.out.find("\"give_up\""), std::string::npos);
  auto v = run("rank --kb " + kb("computers.kb") + " --request sup4 --offers " + offers +
               " --baseline vsm");
  EXPECT_EQ(v.out.substr(0, v.out.find('\n')), "rank\tid\tscore");
  EXPECT_NE(v.out.find("1\tdem1\t"), std::string::npos);
}

TEST(Cli, EvalRnorm) {
  auto dir = aln::testing::data_path("rnorm/");
  EXPECT_EQ(run("eval-rnorm --sys " + dir + "identity.sys --usr " + dir + "abc.usr").out, "1\n");
  EXPECT_EQ(run("eval-rnorm --sys " + dir + "acb.sys --usr " + dir + "abc.usr").out, "2/3\n");
}

TEST(Cli, ErrorsCarryCodeAndSpan) {
  auto r = run("normalize --concept '(and A (not (and B C)))'");
  EXPECT_NE(r.status, 0);
  EXPECT_EQ(r.out, "error: negated-compound at 1:13 [12,21): only concept names can be negated\n");
  auto p = run("abduce --c A --d '(not A)'");
  EXPECT_NE(p.status, 0);
  EXPECT_NE(p.out.find("error: partial-match"), std::string::npos);
  EXPECT_NE(run("classify --kb /nonexistent --sup A --dem B").out.find("io-error"),
            std::string::npos);
  EXPECT_NE(run("bogus").status, 0);
}
