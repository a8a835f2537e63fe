#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "support.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;  // stdout and stderr interleaved
};

Run icc_run(const std::string& args) {
  std::string cmd = std::string(ICC_BINARY) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& name) { return icc::testing::fixture(name); }

bool has(const Run& r, const std::string& s) { return r.out.find(s) != std::string::npos; }

TEST(CliCheck, QbfReportsPspace) {
  auto r = icc_run("check " + fx("qbf.trs") + " --precedence " + fx("qbf.prec") + " --interp " + fx("qbf.interp") +
                   " --format kv");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "ppo=yes\n"));
  EXPECT_TRUE(has(r, "quasi_interp=yes\n"));
  EXPECT_TRUE(has(r, "additive=yes\n"));
  EXPECT_TRUE(has(r, "mode=nondeterministic\n"));
  EXPECT_TRUE(has(r, "class=PSPACE\n"));
}

TEST(CliCheck, BooleansReportsPtime) {
  auto r = icc_run("check " + fx("booleans.trs") + " --interp " + fx("booleans.interp"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "interpretation: strict-interpretation, additive"));
  EXPECT_TRUE(has(r, "overlap_free=yes\n"));
  EXPECT_TRUE(has(r, "class=PTIME\n"));
}

TEST(CliCheck, SatReportsNptime) {
  auto r = icc_run("check " + fx("sat3.trs") + " --interp " + fx("sat3.interp") + " --format kv");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "strict_interp=yes\n"));
  EXPECT_TRUE(has(r, "class=NPTIME\n"));
}

TEST(CliCheck, CertificateFailureStillExitsZero) {
  auto r = icc_run("check " + fx("qbf.trs") + " --precedence " + fx("qbf.reversed.prec"));
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "status=falsified\n"));
  EXPECT_TRUE(has(r, "rule 1 not oriented"));
}

TEST(CliCheck, OutputIsStableForAFixedSeed) {
  std::string args = "check " + fx("first-n.trs") + " --set-interp " + fx("first-n.published.setinterp") + " --seed 5";
  auto a = icc_run(args), b = icc_run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(has(a, "seed=5\n"));
  EXPECT_TRUE(has(a, "constructor_preserving=no\n"));
}

TEST(CliCheck, FloorOverride) {
  auto r = icc_run("check " + fx("booleans.trs") + " --interp " + fx("booleans.interp") + " --floor 0 --format kv");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "strict_interp=no\n"));
}

TEST(CliEval, FirstN) {
  auto r = icc_run("eval " + fx("first-n.trs") + " 'f(s(s(s(0))))'");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "cons(s(s(0)),cons(s(0),cons(0,nil)))");
  EXPECT_TRUE(has(r, "status=normal_form\n"));
}

TEST(CliEval, SatisfiableFormulaMaxIsTrue) {
  std::string formula =
      "f(cons(vee(e(0(1(eps))),e(1(0(eps))),neg(1(1(eps)))),cons(vee(e(0(1(eps))),neg(1(0(eps))),neg(0(1(eps)))),nil)))";
  auto r = icc_run("eval " + fx("sat3.trs") + " '" + formula + "' --nd --format kv");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "max=tt\n"));
}

TEST(CliEval, TraceAndMemo) {
  auto t = icc_run("eval " + fx("first-n.trs") + " 'f(s(0))' --trace");
  EXPECT_EQ(t.code, 0);
  EXPECT_TRUE(has(t, "f(s(0)) = cons(0,nil)\n  f(0) = nil\n"));
  auto m = icc_run("eval " + fx("first-n.trs") + " 'f(s(s(0)))' --memo --set-interp " + fx("first-n.setinterp"));
  EXPECT_EQ(m.code, 0) << m.out;
  EXPECT_TRUE(has(m, "0 violation(s)"));
}

TEST(CliEval, ExitCodes) {
  std::string fn = fx("first-n.trs");
  EXPECT_EQ(icc_run("eval " + fn + " 'f(s(0))' --max-steps 0").code, 4);
  EXPECT_EQ(icc_run("eval " + fn + " 'f(s(0)'").code, 2);
  EXPECT_EQ(icc_run("eval " + fn + " 'f(s(0))' --memo").code, 3);  // not cons-free
  EXPECT_EQ(icc_run("eval " + fn + " 'f(s(0))' --nd --trace").code, 1);
  EXPECT_EQ(icc_run("eval " + fn).code, 1);
  EXPECT_EQ(icc_run("frobnicate").code, 1);
  EXPECT_EQ(icc_run("--help").code, 0);
  EXPECT_EQ(icc_run("eval " + fx("cf-last.trs") + " 'last(nil)'").code, 6);
  EXPECT_EQ(icc_run("eval " + fx("cf-pick.trs") + " 'pick(nil)' --nd").code, 6);
  std::string bad = "f := custom union nil";
  auto dir = std::filesystem::temp_directory_path() / "icc_cli_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "wrong.setinterp") << bad << '\n';
  EXPECT_EQ(icc_run("eval " + fn + " 'f(s(0))' --memo --set-interp " + (dir / "wrong.setinterp").string()).code, 5);
  EXPECT_EQ(icc_run("check " + (dir / "missing.trs").string()).code, 1);
}

TEST(CliCorpus, FilterSelectsTaggedCriteria) {
  auto r = icc_run("corpus --filter ppo --format kv");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_TRUE(has(r, "criterion_1=pass\n"));
  EXPECT_FALSE(has(r, "criterion_2="));
  EXPECT_TRUE(has(r, "passed=1\n"));
  EXPECT_EQ(icc_run("corpus --filter nothing-matches").code, 1);
}

TEST(CliCorpus, CorruptedPrecedenceNamesTheRule) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "icc_corrupt_fixtures";
  fs::remove_all(dir);
  fs::copy(ICC_FIXTURE_DIR, dir);
  std::ofstream(dir / "qbf.prec", std::ios::trunc) << "ver > f\n";
  auto r = icc_run("corpus --filter ppo --fixtures " + dir.string());
  EXPECT_EQ(r.code, 5) << r.out;
  EXPECT_TRUE(has(r, "FAIL"));
  EXPECT_TRUE(has(r, "unoriented rules 1:f(phi)")) << r.out;
  fs::remove_all(dir);
}

}  // namespace
