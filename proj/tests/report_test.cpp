#include <gtest/gtest.h>

#include <array>

#include "icc/report.hpp"
#include "support.hpp"

namespace icc {
namespace {

constexpr Cert Y = Cert::yes, N = Cert::no;

Certificates certs(Cert ppo, Cert strict, Cert quasi, Cert additive, Cert preserving) {
  Certificates c;
  c.ppo = ppo;
  c.strict_interp = strict;
  c.quasi_interp = quasi;
  c.additive = additive;
  c.cons_preserving = preserving;
  return c;
}

int rank(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::ptime: return 0;
    case ComplexityClass::nptime: return 1;
    case ComplexityClass::pspace: return 2;
    case ComplexityClass::none: return 3;
  }
  return 4;
}

TEST(ImpliedClass, Confluent) {
  auto m = Mode::confluent;
  EXPECT_EQ(implied_class(certs(N, Y, Y, Y, N), m), ComplexityClass::ptime);
  EXPECT_EQ(implied_class(certs(Y, N, Y, Y, N), m), ComplexityClass::ptime);
  EXPECT_EQ(implied_class(certs(Y, N, Y, N, N), m), ComplexityClass::none);
  EXPECT_EQ(implied_class(certs(N, N, N, N, Y), m), ComplexityClass::ptime);
  EXPECT_EQ(implied_class(certs(Y, N, N, N, N), m), ComplexityClass::none);
  EXPECT_EQ(implied_class(certs(N, Y, Y, N, N), m), ComplexityClass::none);
  EXPECT_EQ(implied_class(Certificates{}, m), ComplexityClass::none);
}

TEST(ImpliedClass, Nondeterministic) {
  auto m = Mode::nondeterministic;
  EXPECT_EQ(implied_class(certs(N, Y, Y, Y, N), m), ComplexityClass::nptime);
  EXPECT_EQ(implied_class(certs(Y, N, Y, N, N), m), ComplexityClass::pspace);
  EXPECT_EQ(implied_class(certs(Y, Y, N, N, N), m), ComplexityClass::pspace);
  EXPECT_EQ(implied_class(certs(Y, Y, Y, Y, N), m), ComplexityClass::nptime);
  EXPECT_EQ(implied_class(certs(N, N, N, N, Y), m), ComplexityClass::ptime);
  EXPECT_EQ(implied_class(certs(N, N, Y, Y, N), m), ComplexityClass::none);
  EXPECT_EQ(implied_class(certs(Y, N, N, N, N), m), ComplexityClass::none);
}

TEST(ImpliedClass, MoreCertificatesNeverWeakenTheClass) {
  const std::array<Cert, 3> vals{Cert::yes, Cert::no, Cert::unknown};
  for (Mode m : {Mode::confluent, Mode::nondeterministic}) {
    for (int code = 0; code < 243; ++code) {
      std::array<Cert, 5> c;
      for (int i = 0, k = code; i < 5; ++i, k /= 3) c[i] = vals[k % 3];
      auto base = certs(c[0], c[1], c[2], c[3], c[4]);
      // overlap and cons-free flags never license a class on their own
      Certificates extra = base;
      extra.overlap_free = Cert::yes;
      extra.cons_free = Cert::yes;
      EXPECT_EQ(implied_class(base, m), implied_class(extra, m));
      for (int i = 0; i < 5; ++i) {
        if (c[i] == Cert::yes) continue;
        auto up = c;
        up[i] = Cert::yes;
        EXPECT_LE(rank(implied_class(certs(up[0], up[1], up[2], up[3], up[4]), m)), rank(implied_class(base, m)));
      }
      // unknown is never treated as yes
      auto down = c;
      for (auto& x : down) x = x == Cert::unknown ? Cert::no : x;
      EXPECT_EQ(implied_class(base, m), implied_class(certs(down[0], down[1], down[2], down[3], down[4]), m));
    }
  }
}

CheckOptions options(const Program& p, const char* prec, const char* interp) {
  CheckOptions o;
  if (prec) o.precedence = load_precedence(testing::fixture(prec));
  if (interp) o.interp = load_interpretation(testing::fixture(interp), &p);
  return o;
}

TEST(ClassifyProgram, QbfWithPrecedenceAndQuasiInterpretation) {
  Program p = testing::load("qbf.trs");
  auto r = classify_program(p, "qbf", options(p, "qbf.prec", "qbf.interp"));
  EXPECT_EQ(r.certs.ppo, Cert::yes);
  EXPECT_EQ(r.certs.quasi_interp, Cert::yes);
  EXPECT_EQ(r.certs.strict_interp, Cert::no);
  EXPECT_EQ(r.certs.additive, Cert::yes);
  EXPECT_EQ(r.mode, Mode::nondeterministic);
  EXPECT_EQ(r.evidence, ComplexityClass::pspace);
  EXPECT_EQ(r.status, VerdictStatus::verified);
}

TEST(ClassifyProgram, BooleansWithStrictInterpretation) {
  Program p = testing::load("booleans.trs");
  auto r = classify_program(p, "booleans", options(p, nullptr, "booleans.interp"));
  EXPECT_EQ(r.certs.strict_interp, Cert::yes);
  EXPECT_EQ(r.certs.additive, Cert::yes);
  EXPECT_EQ(r.certs.overlap_free, Cert::yes);
  EXPECT_EQ(r.certs.cons_free, Cert::no);
  EXPECT_EQ(r.certs.cons_preserving, Cert::unknown);
  EXPECT_EQ(r.evidence, ComplexityClass::ptime);
  EXPECT_EQ(r.ppo_source, "synthesized");
}

TEST(ClassifyProgram, SatWithStrictInterpretation) {
  Program p = testing::load("sat3.trs");
  auto r = classify_program(p, "sat3", options(p, nullptr, "sat3.interp"));
  EXPECT_EQ(r.certs.strict_interp, Cert::yes);
  EXPECT_EQ(r.certs.overlap_free, Cert::no);
  EXPECT_EQ(r.evidence, ComplexityClass::nptime);
}

TEST(ClassifyProgram, ReversedPrecedenceIsFalsified) {
  Program p = testing::load("qbf.trs");
  auto r = classify_program(p, "qbf", options(p, "qbf.reversed.prec", nullptr));
  EXPECT_EQ(r.certs.ppo, Cert::no);
  EXPECT_EQ(r.status, VerdictStatus::falsified);
  EXPECT_NE(r.to_text(p).find("rule 1 not oriented"), std::string::npos);
}

TEST(ClassifyProgram, ConsFreeUsesCanonicalInterpretation) {
  Program p = testing::load("cf-pick.trs");
  auto r = classify_program(p, "cf-pick", CheckOptions{});
  EXPECT_EQ(r.preservation_source, "canonical");
  EXPECT_EQ(r.certs.cons_preserving, Cert::yes);
  EXPECT_EQ(r.evidence, ComplexityClass::ptime);
}

TEST(ClassifyProgram, PpoAloneClaimsNothing) {
  Program p = testing::load("first-n.trs");
  auto r = classify_program(p, "first-n", CheckOptions{});
  EXPECT_EQ(r.certs.ppo, Cert::yes);
  EXPECT_EQ(r.evidence, ComplexityClass::none);
}

TEST(ClassifyProgram, KeyValueBlockIsStable) {
  Program p = testing::load("booleans.trs");
  CheckOptions o = options(p, nullptr, "booleans.interp");
  o.set_interp = load_set_interpretation(testing::fixture("booleans.setinterp"), p);
  o.seed = 42;
  std::string a = classify_program(p, "booleans", o).to_kv();
  std::string b = classify_program(p, "booleans", o).to_kv();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a,
            "program=booleans\nmode=confluent\nppo=yes\nstrict_interp=yes\nquasi_interp=yes\nadditive=yes\n"
            "cons_free=no\nconstructor_preserving=yes\noverlap_free=yes\nclass=PTIME\nseed=42\nstatus=verified\n");
}

}  // namespace
}  // namespace icc
