#include <gtest/gtest.h>

#include <random>

#include "icc/term.hpp"
#include "support.hpp"

namespace icc {
namespace {

using testing::term;

Program signature() {
  return parse_program(
      "mode confluent\n"
      "constructors ff/0 tt/0 eps/0 0/1 1/1 nil/0 cons/2 a/0\n"
      "functions f/2 main\n");
}

TEST(TermSize, CountsSymbolOccurrences) {
  Program p = signature();
  EXPECT_EQ(term(p, "f(a,x)").size(), 3u);
  EXPECT_EQ(term(p, "nil").size(), 1u);
  EXPECT_EQ(term(p, "cons(0(eps),nil)").size(), 4u);
}

TEST(Subterm, ReflexiveAndDirect) {
  Program p = signature();
  Term t = term(p, "cons(0(eps),nil)");
  EXPECT_TRUE(is_subterm(t, t));
  EXPECT_TRUE(is_subterm(term(p, "0(eps)"), t));
  EXPECT_FALSE(is_subterm(term(p, "tt"), term(p, "ff")));
}

TEST(Match, BindsVariables) {
  Program p = signature();
  auto s = match(term(p, "0(x)"), term(p, "0(1(eps))"));
  ASSERT_TRUE(s);
  EXPECT_EQ(s->size(), 1u);
  EXPECT_EQ(s->at("x"), term(p, "1(eps)"));
  auto e = match(term(p, "eps"), term(p, "eps"));
  ASSERT_TRUE(e);
  EXPECT_TRUE(e->empty());
}

TEST(Match, NonLinearPatternNeedsEqualValues) {
  Program p = signature();
  EXPECT_FALSE(match(term(p, "cons(x,x)"), term(p, "cons(tt,ff)")));
  EXPECT_TRUE(match(term(p, "cons(x,x)"), term(p, "cons(tt,tt)")));
}

TEST(Substitute, ReplacesVariables) {
  Program p = signature();
  EXPECT_EQ(substitute(term(p, "x"), {{"x", term(p, "tt")}}), term(p, "tt"));
  EXPECT_EQ(substitute(term(p, "cons(x,nil)"), {{"x", term(p, "0(eps)")}}), term(p, "cons(0(eps),nil)"));
  EXPECT_EQ(substitute(term(p, "eps"), {}), term(p, "eps"));
}

TEST(TermOrder, RootThenArguments) {
  Program p = signature();
  Term t = term(p, "cons(tt,nil)");
  EXPECT_FALSE(term_lt(t, t));
  EXPECT_TRUE(term_lt(term(p, "ff"), term(p, "tt")));
  EXPECT_FALSE(term_lt(term(p, "tt"), term(p, "ff")));
  EXPECT_TRUE(term_lt(term(p, "cons(ff,nil)"), term(p, "cons(tt,nil)")));
}

TEST(Positions, SubtermAtFollowsOneBasedPath) {
  Program p = signature();
  Term t = term(p, "cons(0(eps),nil)");
  EXPECT_EQ(subterm_at(t, {1, 1}), term(p, "eps"));
  EXPECT_EQ(subterm_at(t, {2}), term(p, "nil"));
  EXPECT_EQ(to_string(Position{}), "root");
}

TEST(TermProperty, OrderIsStrictTotalOnValues) {
  Program p = signature();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Term a = testing::random_value(p, rng, 8), b = testing::random_value(p, rng, 8);
    Term c = testing::random_value(p, rng, 8);
    EXPECT_FALSE(term_lt(a, a));
    if (a == b) continue;
    EXPECT_NE(term_lt(a, b), term_lt(b, a)) << a << " vs " << b;
    if (term_lt(a, b) && term_lt(b, c)) {
      EXPECT_TRUE(term_lt(a, c));
    }
  }
}

TEST(TermProperty, MatchInvertsSubstitution) {
  Program p = signature();
  std::mt19937_64 rng(11);
  Term pattern = term(p, "cons(x,cons(0(y),z))");
  for (int i = 0; i < 200; ++i) {
    Substitution s{{"x", testing::random_value(p, rng)},
                   {"y", testing::random_value(p, rng)},
                   {"z", testing::random_value(p, rng)}};
    Term t = substitute(pattern, s);
    EXPECT_TRUE(t.is_ground());
    auto m = match(pattern, t);
    ASSERT_TRUE(m);
    EXPECT_EQ(*m, s);
    EXPECT_EQ(t.size(), pattern.size() - 3 + s.at("x").size() + s.at("y").size() + s.at("z").size());
  }
}

TEST(TermProperty, SubtermsAreContained) {
  Program p = signature();
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    Term t = testing::random_value(p, rng, 15);
    TermHashSet subs;
    collect_subterms(t, subs);
    for (const Term& u : subs) {
      EXPECT_TRUE(is_subterm(u, t));
      EXPECT_LE(u.size(), t.size());
    }
  }
}

}  // namespace
}  // namespace icc
