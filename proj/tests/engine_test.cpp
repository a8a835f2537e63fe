#include <gtest/gtest.h>

#include <random>
#include <set>

#include "icc/engine.hpp"
#include "support.hpp"

namespace icc {
namespace {

using testing::term;

std::string value(const Evaluator::Result& r) { return r.value ? to_string(*r.value) : "none"; }

TEST(EvalCbv, EqualWordsAreEqual) {
  Evaluator ev(testing::load("booleans.trs"));
  EXPECT_EQ(value(ev.evaluate(term(ev.program(), "eq(0(1(eps)),0(1(eps)))"))), "tt");
  EXPECT_EQ(value(ev.evaluate(term(ev.program(), "eq(0(1(eps)),0(0(eps)))"))), "ff");
}

TEST(EvalCbv, FirstNListsPredecessors) {
  Program p = testing::load("first-n.trs");
  Evaluator ev(p);
  EXPECT_EQ(value(ev.evaluate(term(p, "f(s(s(0)))"))), "cons(s(0),cons(0,nil))");
  EXPECT_EQ(value(ev.evaluate(term(p, "f(s(s(s(0))))"))), "cons(s(s(0)),cons(s(0),cons(0,nil)))");
}

TEST(EvalCbv, SingleStepRule) {
  Evaluator ev(testing::load("booleans.trs"));
  auto r = ev.evaluate(term(ev.program(), "eq(eps,eps)"));
  EXPECT_EQ(value(r), "tt");
  EXPECT_EQ(r.stats.steps, 1u);
  EXPECT_EQ(r.stats.status, EvalStatus::normal_form);
}

TEST(EvalCbv, MemoizationSharesRepeatedCalls) {
  Program p = testing::load("first-n.trs");
  Evaluator ev(p);
  auto first = ev.evaluate(term(p, "f(s(s(s(0))))"));
  EXPECT_EQ(first.stats.cache_entries, 4u);
  auto again = ev.evaluate(term(p, "f(s(s(s(0))))"));
  EXPECT_EQ(again.stats.steps, 0u);
  EXPECT_EQ(again.value, first.value);
}

TEST(EvalCbv, ZeroStepBudgetIsExhausted) {
  Program p = testing::load("first-n.trs");
  EvalBudget b;
  b.max_steps = 0;
  Evaluator ev(p, b);
  auto r = ev.evaluate(term(p, "f(s(0))"));
  EXPECT_FALSE(r.value);
  EXPECT_EQ(r.stats.status, EvalStatus::budget_exhausted);
}

TEST(EvalCbv, TermSizeBudget) {
  Program p = testing::load("first-n.trs");
  EvalBudget b;
  b.max_term_size = 8;
  Evaluator ev(p, b);
  EXPECT_EQ(ev.evaluate(term(p, "f(s(s(s(s(0)))))")).stats.status, EvalStatus::budget_exhausted);
  EXPECT_EQ(ev.evaluate(term(p, "f(s(0))")).stats.status, EvalStatus::normal_form);
}

TEST(EvalCbv, MissingRuleIsStuck) {
  Program p = testing::load("cf-last.trs");
  Evaluator ev(p);
  auto r = ev.evaluate(term(p, "last(nil)"));
  EXPECT_FALSE(r.value);
  EXPECT_EQ(r.stats.status, EvalStatus::stuck);
  EXPECT_EQ(value(ev.evaluate(term(p, "last(cons(a,cons(b,nil)))"))), "b");
}

TEST(EvalCbv, SelfCallIsDivergent) {
  Program p = parse_program("mode confluent\nconstructors a/0\nfunctions loop/1 main\nrule loop(x) -> loop(x)\n");
  Evaluator ev(p);
  auto r = ev.evaluate(term(p, "loop(a)"));
  EXPECT_FALSE(r.value);
  EXPECT_EQ(r.stats.status, EvalStatus::divergent);
  // a failed call leaves no entry behind
  EXPECT_EQ(ev.cache_entries(), 0u);
}

TEST(EvalCbv, DisabledCacheGivesSameValues) {
  Program p = testing::load("booleans.trs");
  EvalBudget off;
  off.max_cache_entries = 0;
  Evaluator memo(p), plain(p, off);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> len(0, 4), bit(0, 1);
  auto rand_word = [&] {
    std::string s;
    for (int i = len(rng); i > 0; --i) s += bit(rng) ? '1' : '0';
    return testing::word(p, s);
  };
  for (int i = 0; i < 100; ++i) {
    std::vector<Term> xs;
    for (int k = len(rng); k > 0; --k) xs.push_back(rand_word());
    Term call = p.make("in", {rand_word(), testing::list(p, xs)});
    auto a = memo.evaluate(call), b = plain.evaluate(call);
    EXPECT_EQ(value(a), value(b)) << call;
    EXPECT_EQ(b.stats.cache_entries, 0u);
  }
}

TEST(EvalNd, DeterministicProgramGivesSingleton) {
  Evaluator ev(testing::load("booleans.trs"));
  auto r = ev.evaluate_nd(term(ev.program(), "eq(eps,eps)"));
  ASSERT_EQ(r.values.size(), 1u);
  EXPECT_EQ(to_string(r.values[0]), "tt");
  EXPECT_FALSE(r.incomplete);
}

TEST(EvalNd, GuessOnOneClauseGivesEightLists) {
  Program p = testing::load("sat3.trs");
  Evaluator ev(p);
  auto r = ev.evaluate_nd(term(p, "hyp(cons(vee(e(0(eps)),e(1(eps)),e(eps)),nil))"));
  EXPECT_EQ(r.values.size(), 8u);
  std::set<std::string> got;
  for (const Term& t : r.values) got.insert(to_string(t));
  EXPECT_TRUE(got.count("nil"));
  EXPECT_TRUE(got.count("cons(0(eps),cons(1(eps),cons(eps,nil)))"));
}

TEST(EvalNd, SatisfiableFormulaReachesTrue) {
  Program p = testing::load("sat3.trs");
  // (x1 or x2 or not x3) and (x1 or not x2 or not x1), identifiers as 2-bit words
  Term f = term(p, "f(cons(vee(e(0(1(eps))),e(1(0(eps))),neg(1(1(eps)))),"
                   "cons(vee(e(0(1(eps))),neg(1(0(eps))),neg(0(1(eps)))),nil)))");
  auto best = nd_value(p, *p.require("f"), {f.arg(0)});
  ASSERT_TRUE(best);
  EXPECT_EQ(to_string(*best), "tt");
}

TEST(EvalNd, ChoiceGivesBothOutcomes) {
  Program p = parse_program(
      "mode nondeterministic\nconstructors ff/0 tt/0 a/0\nfunctions g/1 main\n"
      "rule g(x) -> tt\nrule g(x) -> ff\n");
  auto r = eval_nd(p, *p.main(), {term(p, "a")});
  ASSERT_EQ(r.values.size(), 2u);
  EXPECT_EQ(to_string(r.values[0]), "ff");
  EXPECT_EQ(to_string(r.values[1]), "tt");
  ASSERT_EQ(r.cache.size(), 1u);
  EXPECT_EQ(r.cache[0].values.size(), 2u);
}

TEST(EvalNd, PickEnumeratesElements) {
  Program p = testing::load("cf-pick.trs");
  auto r = eval_nd(p, *p.main(), {term(p, "cons(a,cons(c,cons(b,nil)))")});
  ASSERT_EQ(r.values.size(), 3u);
  EXPECT_EQ(to_string(*max_value(r.values)), "c");
  auto none = eval_nd(p, *p.main(), {term(p, "nil")});
  EXPECT_TRUE(none.values.empty());
  EXPECT_EQ(none.stats.status, EvalStatus::stuck);
}

TEST(EvalNd, BudgetMarksIncomplete) {
  Program p = testing::load("sat3.trs");
  EvalBudget b;
  b.max_steps = 3;
  Evaluator ev(p, b);
  auto r = ev.evaluate_nd(term(p, "hyp(cons(vee(e(0(eps)),e(1(eps)),e(eps)),nil))"));
  EXPECT_TRUE(r.incomplete);
  EXPECT_EQ(r.stats.status, EvalStatus::budget_exhausted);
}

TEST(EvalNd, AgreesWithCbvOnOrthogonalPrograms) {
  Program p = testing::load("first-n.trs");
  for (unsigned n = 0; n < 8; ++n) {
    Term arg = testing::tally(p, n);
    auto det = eval_cbv(p, *p.main(), {arg});
    auto nd = eval_nd(p, *p.main(), {arg});
    ASSERT_EQ(nd.values.size(), 1u);
    EXPECT_EQ(nd.values[0], *det.value);
  }
}

TEST(MaxValue, OrderedByDeclaration) {
  Program p = testing::load("booleans.trs");
  EXPECT_EQ(to_string(*max_value({term(p, "tt"), term(p, "ff")})), "tt");
  EXPECT_EQ(to_string(*max_value({term(p, "nil")})), "nil");
  EXPECT_FALSE(max_value({}));
}

TEST(CallTree, MembershipUnfoldsIntoComparisonAndRecursion) {
  Program p = testing::load("booleans.trs");
  auto tree = trace_call_tree(p, *p.require("in"),
                              {term(p, "0(eps)"), term(p, "cons(1(eps),cons(0(eps),nil))")});
  ASSERT_EQ(tree.roots.size(), 1u);
  const auto& root = tree.nodes[tree.roots[0]];
  EXPECT_EQ(root.function->name, "in");
  std::set<std::string> kids;
  for (std::size_t c : root.children) {
    const auto& n = tree.nodes[c];
    kids.insert(to_string(Term::apply(n.function, n.args)));
  }
  EXPECT_TRUE(kids.count("eq(0(eps),1(eps))"));
  EXPECT_TRUE(kids.count("in(0(eps),cons(0(eps),nil))"));
  EXPECT_EQ(to_string(*tree.value), "tt");
}

TEST(CallTree, ConstantRhsGivesLeaf) {
  Program p = parse_program("mode confluent\nconstructors a/0\nfunctions k/0 main\nrule k -> a\n");
  auto tree = trace_call_tree(p, *p.main(), {});
  ASSERT_EQ(tree.nodes.size(), 1u);
  EXPECT_TRUE(tree.nodes[0].children.empty());
  EXPECT_EQ(tree.depth(), 1u);
}

TEST(CallTree, FirstNIsAChain) {
  Program p = testing::load("first-n.trs");
  auto tree = trace_call_tree(p, *p.main(), {term(p, "s(0)")});
  EXPECT_EQ(tree.depth(), 2u);
  EXPECT_EQ(tree.to_text(), "f(s(0)) = cons(0,nil)\n  f(0) = nil\n");
}

TEST(Observer, SeesEveryStep) {
  Program p = testing::load("first-n.trs");
  Evaluator ev(p);
  std::size_t seen = 0;
  ev.set_observer([&](std::size_t rule, const Term& lhs, const Term& rhs) {
    ++seen;
    EXPECT_LT(rule, p.rules().size());
    EXPECT_TRUE(lhs.is_function_rooted());
    (void)rhs;
  });
  auto r = ev.evaluate(term(p, "f(s(s(0)))"));
  EXPECT_EQ(seen, r.stats.steps);
}

}  // namespace
}  // namespace icc
