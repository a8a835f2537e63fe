#include <gtest/gtest.h>

#include <random>

#include "icc/ppo.hpp"
#include "support.hpp"

namespace icc {
namespace {

using testing::term;

Precedence qbf_chain() { return load_precedence(testing::fixture("qbf.prec")); }

/// Random term over all symbols of p plus the variables x, y.
Term random_open(const Program& p, std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<std::size_t> pick(0, p.symbols().size() + 1);
  std::size_t k = pick(rng);
  if (depth == 0 || k >= p.symbols().size()) {
    std::vector<SymbolRef> leaves;
    for (const auto& s : p.symbols()) {
      if (s->arity == 0) leaves.push_back(s);
    }
    std::uniform_int_distribution<std::size_t> leaf(0, leaves.size() + 1);
    std::size_t l = leaf(rng);
    if (l < leaves.size()) return Term::constant(leaves[l]);
    return Term::variable(l == leaves.size() ? "x" : "y");
  }
  const SymbolRef& s = p.symbols()[k];
  std::vector<Term> args;
  for (std::size_t i = 0; i < s->arity; ++i) args.push_back(random_open(p, rng, depth - 1));
  return Term::apply(s, std::move(args));
}

TEST(Precedence, ParsesChainsAndEquivalences) {
  Precedence p = Precedence::parse("f > g = h\n# comment\nh > k\n");
  EXPECT_TRUE(p.greater("f", "g"));
  EXPECT_TRUE(p.equivalent("g", "h"));
  EXPECT_TRUE(p.greater("f", "k"));
  EXPECT_TRUE(p.greater("g", "k"));
  EXPECT_FALSE(p.geq("k", "f"));
}

TEST(Precedence, ContradictionIsRejected) {
  EXPECT_THROW(Precedence::parse("f > g\ng > f\n"), ParseError);
  EXPECT_THROW(Precedence::parse("f > g\ng = f\n"), ParseError);
  EXPECT_THROW(Precedence::parse("f >\n"), ParseError);
  Precedence p;
  ASSERT_TRUE(p.add_greater("a", "b"));
  EXPECT_FALSE(p.add_greater("b", "a"));
  EXPECT_FALSE(p.add_equal("a", "b"));
  EXPECT_TRUE(p.greater("a", "b"));
}

TEST(Precedence, TextRoundTrips) {
  Precedence p = Precedence::parse("a > b > c\nb = d\na > e\n");
  Precedence q = Precedence::parse(p.to_text());
  for (const auto& x : p.names()) {
    for (const auto& y : p.names()) EXPECT_EQ(p.geq(x, y), q.geq(x, y)) << x << " " << y;
  }
}

TEST(Precedence, ValidateAgainstProgram) {
  Program prog = testing::load("booleans.trs");
  EXPECT_TRUE(Precedence::parse("in > eq\n").validate(prog).empty());
  EXPECT_EQ(Precedence::parse("in > tt\n").validate(prog).size(), 1u);
  EXPECT_EQ(Precedence::parse("in > nope\n").validate(prog).size(), 1u);
  EXPECT_EQ(Precedence::parse("in = eq\n").validate(prog).size(), 0u);
  EXPECT_EQ(Precedence::parse("in = ite\n").validate(prog).size(), 1u);
}

TEST(ProductExtension, NeedsOneStrictPosition) {
  Program p = parse_program("mode confluent\nconstructors a/0 b/0 c/0\nfunctions f/1 main\n");
  // base order: a < b < c
  auto base = [](const Term& s, const Term& t) { return s.name() < t.name(); };
  std::vector<Term> aa{term(p, "a")};
  EXPECT_FALSE(product_lt(aa, aa, base));
  std::vector<Term> xb{term(p, "x"), term(p, "b")}, xc{term(p, "x"), term(p, "c")};
  EXPECT_TRUE(product_lt(xb, xc, base));
  std::vector<Term> ba{term(p, "b"), term(p, "a")}, ab{term(p, "a"), term(p, "b")};
  EXPECT_FALSE(product_lt(ba, ab, base));
  EXPECT_THROW(product_lt(aa, ab, base), ContractError);
}

TEST(PpoOrder, SubtermAndIrreflexivity) {
  Program p = testing::load("booleans.trs");
  Precedence prec;
  auto [lt, w] = ppo_lt(term(p, "x"), term(p, "0(x)"), prec);
  EXPECT_TRUE(lt);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->rule, PpoRule::subterm_equal);
  EXPECT_FALSE(ppo_lt(term(p, "eq(x,y)"), term(p, "eq(x,y)"), prec).first);
}

TEST(PpoOrder, GuessBelowVerification) {
  Program p = testing::load("qbf.trs");
  auto [lt, w] = ppo_lt(term(p, "vhyp(ver(phi,h),x,tt)"), term(p, "ver(Exists(x,phi),h)"), qbf_chain());
  EXPECT_TRUE(lt);
  ASSERT_TRUE(w);
  EXPECT_EQ(w->rule, PpoRule::precedence);
  EXPECT_TRUE(replay_witness(*w, qbf_chain()));
}

TEST(PpoOrder, EquivalentHeadsUseProduct) {
  Program p = testing::load("booleans.trs");
  auto [lt, w] = ppo_lt(term(p, "eq(x,y)"), term(p, "eq(0(x),0(y))"), Precedence{});
  ASSERT_TRUE(lt);
  EXPECT_EQ(w->rule, PpoRule::equivalent);
  // two premises x,y < t, then one per strict product position
  EXPECT_EQ(w->premises.size(), 4u);
  EXPECT_FALSE(ppo_lt(term(p, "eq(y,x)"), term(p, "eq(x,y)"), Precedence{}).first);
}

TEST(CheckPpo, QbfUnderChainAndReversed) {
  for (const char* f : {"qbf.trs", "qbf.published.trs"}) {
    Program p = testing::load(f);
    auto ok = check_ppo(p, qbf_chain());
    EXPECT_TRUE(ok.ok) << f;
    for (const auto& v : ok.rules) {
      ASSERT_TRUE(v.witness);
      EXPECT_TRUE(replay_witness(*v.witness, qbf_chain()));
    }
    auto bad = check_ppo(p, load_precedence(testing::fixture("qbf.reversed.prec")));
    EXPECT_FALSE(bad.ok) << f;
    // the entry rule f(phi) -> ver(...) is the first rule
    EXPECT_FALSE(bad.rules[0].oriented);
  }
}

TEST(CheckPpo, EmptyProgramIsVacuous) {
  Program p = parse_program("mode confluent\nconstructors a/0\nfunctions f/1 main\n");
  EXPECT_TRUE(check_ppo(p, Precedence{}).ok);
}

TEST(Synthesis, QbfPutsEntryAboveVerification) {
  auto r = synthesize_precedence(testing::load("qbf.trs"));
  ASSERT_EQ(r.status, SynthesisStatus::found);
  EXPECT_TRUE(r.precedence->greater("f", "ver"));
}

TEST(Synthesis, FixturesWithProofs) {
  for (const char* f : {"booleans.trs", "membership.trs", "first-n.trs", "sat3.trs", "cf-last.trs", "cf-pick.trs"}) {
    Program p = testing::load(f);
    auto r = synthesize_precedence(p);
    ASSERT_EQ(r.status, SynthesisStatus::found) << f;
    EXPECT_TRUE(check_ppo(p, *r.precedence).ok) << f;
    EXPECT_TRUE(r.precedence->validate(p).empty()) << f;
  }
}

TEST(Synthesis, HalvingNeedsNoPrecedence) {
  Program p = parse_program(
      "mode confluent\nconstructors 0/0 s/1\nfunctions half/1 main\n"
      "rule half(0) -> 0\nrule half(s(0)) -> 0\nrule half(s(s(x))) -> s(half(x))\n");
  auto r = synthesize_precedence(p);
  EXPECT_EQ(r.status, SynthesisStatus::found);
}

TEST(Synthesis, NoneForLoopsAndSwaps) {
  Program loop = parse_program(
      "mode confluent\nconstructors 0/0 s/1\nfunctions loop/1 main\nrule loop(s(x)) -> loop(s(x))\n");
  EXPECT_EQ(synthesize_precedence(loop).status, SynthesisStatus::none);
  EXPECT_EQ(synthesize_precedence(testing::load("cf-parity.trs")).status, SynthesisStatus::none);
}

TEST(Synthesis, BudgetExhaustion) {
  auto r = synthesize_precedence(testing::load("qbf.trs"), 3);
  EXPECT_EQ(r.status, SynthesisStatus::budget_exhausted);
  EXPECT_FALSE(r.precedence);
}

TEST(PpoProperty, WitnessesReplayAndOrderIsStrict) {
  Program p = testing::load("booleans.trs");
  Precedence prec = Precedence::parse("in > ite > eq\nin > or = and\n");
  std::mt19937_64 rng(17);
  std::size_t proved = 0;
  for (int i = 0; i < 3000; ++i) {
    Term s = random_open(p, rng, 3), t = random_open(p, rng, 3);
    auto [lt, w] = ppo_lt(s, t, prec);
    EXPECT_FALSE(ppo_lt(s, s, prec).first);
    if (!lt) continue;
    ++proved;
    ASSERT_TRUE(w);
    EXPECT_TRUE(replay_witness(*w, prec)) << s << " < " << t;
    EXPECT_FALSE(ppo_lt(t, s, prec).first) << s << " < " << t;
    for (const auto& v : variables(s)) {
      auto tv = variables(t);
      EXPECT_NE(std::find(tv.begin(), tv.end(), v), tv.end()) << s << " < " << t;
    }
    PpoWitness flipped = *w;
    std::swap(flipped.lower, flipped.upper);
    EXPECT_FALSE(replay_witness(flipped, prec));
  }
  EXPECT_GT(proved, 100u);
}

TEST(PpoProperty, Transitive) {
  Program p = testing::load("membership.trs");
  Precedence prec = Precedence::parse("in > ite > eq\n");
  std::mt19937_64 rng(23);
  std::vector<Term> pool;
  for (int i = 0; i < 60; ++i) pool.push_back(random_open(p, rng, 3));
  for (const Term& a : pool) {
    for (const Term& b : pool) {
      if (!ppo_lt(a, b, prec).first) continue;
      for (const Term& c : pool) {
        if (ppo_lt(b, c, prec).first) {
          EXPECT_TRUE(ppo_lt(a, c, prec).first) << a << " " << b << " " << c;
        }
      }
    }
  }
}

}  // namespace
}  // namespace icc
