#include <gtest/gtest.h>

#include "icc/compose.hpp"
#include "icc/engine.hpp"
#include "icc/ppo.hpp"
#include "support.hpp"

namespace icc {
namespace {

const char* const kAnd =
    "mode confluent\nconstructors ff/0 tt/0\nfunctions and/2 main\n"
    "rule and(tt,y) -> y\nrule and(ff,y) -> ff\n";
const char* const kEq =
    "mode confluent\nconstructors ff/0 tt/0 eps/0 0/1 1/1\nfunctions eq/2 main\n"
    "rule eq(eps,eps) -> tt\nrule eq(0(x),0(y)) -> eq(x,y)\nrule eq(1(x),1(y)) -> eq(x,y)\n"
    "rule eq(0(x),1(y)) -> ff\nrule eq(1(x),0(y)) -> ff\n"
    "rule eq(eps,0(y)) -> ff\nrule eq(eps,1(y)) -> ff\nrule eq(0(x),eps) -> ff\nrule eq(1(x),eps) -> ff\n";
const char* const kId = "mode confluent\nconstructors a/0 s/1\nfunctions id/1 main\nrule id(x) -> x\n";

TEST(Compose, IdentityAfterIdentity) {
  Program id = parse_program(kId);
  Program c = compose_programs(id, {id});
  EXPECT_EQ(c.main()->name, "h");
  EXPECT_TRUE(check_wellformed(c).empty());
  Evaluator ev(c);
  Term t = testing::term(c, "s(s(a))");
  EXPECT_EQ(ev.call("h", {t}).value, t);
}

TEST(Compose, ConjunctionOfEqualities) {
  Program c = compose_programs(parse_program(kAnd), {parse_program(kEq), parse_program(kEq)});
  Evaluator ev(c);
  auto w = [&](const char* bits) { return testing::word(c, bits); };
  EXPECT_EQ(to_string(*ev.call("h", {w(""), w("")}).value), "tt");
  EXPECT_EQ(to_string(*ev.call("h", {w("01"), w("01")}).value), "tt");
  EXPECT_EQ(to_string(*ev.call("h", {w("01"), w("00")}).value), "ff");
  // component functions are renamed apart
  EXPECT_TRUE(c.find("1.eq"));
  EXPECT_TRUE(c.find("2.eq"));
  EXPECT_TRUE(c.find("0.and"));
}

TEST(Compose, ArityMismatchIsRejected) {
  Program a = parse_program(kAnd);
  EXPECT_THROW(compose_programs(a, {parse_program(kEq)}), ContractError);
  EXPECT_THROW(compose_programs(a, {parse_program(kEq), parse_program(kId)}), ContractError);
}

TEST(Compose, ConstructorArityConflictIsRejected) {
  Program other = parse_program("mode confluent\nconstructors tt/1 a/0\nfunctions g/1 main\nrule g(x) -> x\n");
  Program one = parse_program("mode confluent\nconstructors tt/0\nfunctions f/1 main\nrule f(x) -> x\n");
  EXPECT_THROW(compose_programs(one, {other}), ContractError);
}

TEST(Compose, HintsPlaceNewMainOnTop) {
  Program c = compose_programs(parse_program(kAnd), {parse_program(kEq), parse_program(kEq)});
  auto r = synthesize_precedence(c);
  ASSERT_EQ(r.status, SynthesisStatus::found);
  EXPECT_TRUE(r.precedence->greater("h", "0.and"));
  EXPECT_TRUE(r.precedence->greater("h", "1.eq"));
}

TEST(Compose, FreshMainNameAvoidsClashes) {
  Program f = parse_program("mode confluent\nconstructors h/0\nfunctions g/1 main\nrule g(x) -> x\n");
  Program c = compose_programs(f, {f});
  EXPECT_EQ(c.main()->name, "h'");
}

}  // namespace
}  // namespace icc
