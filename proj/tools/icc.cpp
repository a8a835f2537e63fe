// icc: check complexity certificates of constructor rewrite programs,
// evaluate them, and run the fixture corpus.
//
// Exit codes: 0 ok, 1 usage, 2 parse error, 3 contract violation,
// 4 budget exhausted or divergent, 5 assertion failure, 6 stuck.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "icc/acceptance.hpp"
#include "icc/consfree.hpp"
#include "icc/engine.hpp"
#include "icc/maxpoly.hpp"
#include "icc/parser.hpp"
#include "icc/ppo.hpp"
#include "icc/report.hpp"

namespace {

enum Exit { kOk = 0, kUsage = 1, kParse = 2, kContract = 3, kBudget = 4, kAssert = 5, kStuck = 6 };

struct Common {
  std::uint64_t seed = 1;
  std::string format = "text";
};

icc::Rational parse_floor(const std::string& text) {
  icc::Expr e = icc::detail::ExprParser(text, 1, 0, {}).parse();
  if (e.kind() != icc::Expr::Kind::constant) throw icc::ParseError(1, 1, "--floor expects a constant");
  return e.value();
}

std::string base_name(const std::string& path) {
  auto slash = path.find_last_of('/');
  std::string b = slash == std::string::npos ? path : path.substr(slash + 1);
  auto dot = b.rfind('.');
  return dot == std::string::npos ? b : b.substr(0, dot);
}

int exit_for(icc::EvalStatus s) {
  switch (s) {
    case icc::EvalStatus::normal_form: return kOk;
    case icc::EvalStatus::stuck: return kStuck;
    case icc::EvalStatus::budget_exhausted:
    case icc::EvalStatus::divergent: return kBudget;
  }
  return kAssert;
}

struct CheckArgs {
  std::string program;
  std::string precedence, interp, set_interp, floor;
};

int cmd_check(const CheckArgs& a, const Common& c) {
  icc::Program p = icc::load_program(a.program);
  icc::CheckOptions opts;
  opts.seed = c.seed;
  if (!a.precedence.empty()) {
    icc::Precedence prec = icc::load_precedence(a.precedence);
    auto problems = prec.validate(p);
    if (!problems.empty()) throw icc::ContractError("precedence: " + problems.front());
    opts.precedence = std::move(prec);
  }
  if (!a.interp.empty()) {
    opts.interp = icc::load_interpretation(a.interp, &p);
    if (!a.floor.empty()) opts.interp->floor = parse_floor(a.floor);
  }
  if (!a.set_interp.empty()) opts.set_interp = icc::load_set_interpretation(a.set_interp, p);
  auto report = icc::classify_program(p, base_name(a.program), opts);
  if (c.format == "text") std::cout << report.to_text(p) << '\n';
  std::cout << report.to_kv();
  return kOk;
}

struct EvalArgs {
  std::string program, call, set_interp;
  bool nd = false, memo = false, trace = false;
  std::optional<std::size_t> max_steps, max_term_size, max_cache;
};

void print_memo(const icc::MemoAssertions& m, bool kv) {
  if (kv) {
    std::cout << "memo_witness_terms=" << m.witness_terms << '\n'
              << "memo_checked_entries=" << m.checked_entries << '\n'
              << "memo_violations=" << m.violations.size() << '\n';
  } else {
    std::cout << "memo: " << m.checked_entries << " cache entries checked against " << m.witness_terms
              << " witness terms, " << m.violations.size() << " violation(s)\n";
  }
  for (const auto& v : m.violations) std::cerr << "assertion: " << v << '\n';
}

int cmd_eval(const EvalArgs& a, const Common& c) {
  if (a.trace && a.nd) {
    std::cerr << "error: --trace applies to deterministic evaluation\n";
    return kUsage;
  }
  icc::Program p = icc::load_program(a.program);
  icc::Term call = icc::parse_term(p, a.call);
  icc::EvalBudget budget;
  if (a.max_steps) budget.max_steps = *a.max_steps;
  if (a.max_term_size) budget.max_term_size = *a.max_term_size;
  if (a.max_cache) budget.max_cache_entries = *a.max_cache;
  bool kv = c.format == "kv";

  std::optional<icc::SetInterpretation> si;
  if (a.memo) {
    if (!call.is_function_rooted()) throw icc::ContractError("--memo needs a call f(t1,...,tn)");
    si = a.set_interp.empty() ? icc::canonical_interp(p) : icc::load_set_interpretation(a.set_interp, p);
  } else if (!a.set_interp.empty()) {
    std::cerr << "error: --set-interp is used with --memo\n";
    return kUsage;
  }
  std::vector<icc::Term> args(call.args().begin(), call.args().end());

  if (!a.nd) {
    std::optional<icc::Term> value;
    icc::EvalStats stats;
    std::optional<icc::MemoAssertions> memo;
    if (a.trace) {
      icc::Evaluator ev(p, budget);
      auto tree = ev.trace(call);
      std::cout << tree.to_text();
      value = tree.value;
      stats = tree.stats;
    } else if (a.memo) {
      auto r = icc::eval_memo(p, *si, call.symbol(), args, budget);
      value = r.value;
      stats = r.stats;
      memo = r.assertions;
    } else {
      icc::Evaluator ev(p, budget);
      auto r = ev.evaluate(call);
      value = r.value;
      stats = r.stats;
    }
    if (kv) {
      std::cout << "value=" << (value ? icc::to_string(*value) : "none") << '\n';
    } else {
      std::cout << (value ? icc::to_string(*value) : "no normal form") << '\n';
      if (!stats.detail.empty()) std::cout << stats.detail << '\n';
    }
    std::cout << icc::format_stats(stats);
    if (memo) {
      print_memo(*memo, kv);
      if (!memo->ok()) return kAssert;
    }
    return exit_for(stats.status);
  }

  std::vector<icc::Term> values;
  bool incomplete = false;
  icc::EvalStats stats;
  std::optional<icc::MemoAssertions> memo;
  if (a.memo) {
    auto r = icc::eval_memo_nd(p, *si, call.symbol(), args, budget);
    values = r.values;
    incomplete = r.incomplete;
    stats = r.stats;
    memo = r.assertions;
  } else {
    icc::Evaluator ev(p, budget);
    auto r = ev.evaluate_nd(call);
    values = r.values;
    incomplete = r.incomplete;
    stats = r.stats;
  }
  auto best = icc::max_value(values);
  if (kv) {
    std::cout << "normal_forms=";
    for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? ";" : "") << icc::to_string(values[i]);
    std::cout << '\n' << "max=" << (best ? icc::to_string(*best) : "none") << '\n';
  } else {
    std::cout << values.size() << " normal form(s)" << (incomplete ? " (incomplete)" : "") << '\n';
    for (const auto& v : values) std::cout << "  " << icc::to_string(v) << '\n';
    std::cout << "max: " << (best ? icc::to_string(*best) : "none") << '\n';
    if (!stats.detail.empty()) std::cout << stats.detail << '\n';
  }
  std::cout << icc::format_stats(stats) << "incomplete=" << (incomplete ? "true" : "false") << '\n';
  if (memo) {
    print_memo(*memo, kv);
    if (!memo->ok()) return kAssert;
  }
  if (incomplete) return kBudget;
  return exit_for(stats.status);
}

struct CorpusArgs {
  std::string fixtures = ICC_FIXTURE_DIR;
  std::string filter;
};

int cmd_corpus(const CorpusArgs& a, const Common& c) {
  icc::AcceptanceOptions opts;
  opts.fixtures = a.fixtures;
  opts.filter = a.filter;
  opts.seed = c.seed;
  std::size_t failed = 0, ran = 0;
  icc::run_acceptance(opts, [&](const icc::CriterionResult& r) {
    ++ran;
    failed += r.pass ? 0 : 1;
    if (c.format == "kv") {
      std::cout << "criterion_" << r.id << '=' << (r.pass ? "pass" : "fail") << '\n';
    } else {
      std::cout << r.line() << std::endl;
    }
  });
  if (ran == 0) {
    std::cerr << "error: no criterion matches '" << a.filter << "'\n";
    return kUsage;
  }
  if (c.format == "kv") {
    std::cout << "passed=" << ran - failed << "\nfailed=" << failed << '\n';
  } else {
    std::cout << ran - failed << "/" << ran << " criteria passed\n";
  }
  return failed == 0 ? kOk : kAssert;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Complexity certificates and evaluation for constructor rewrite programs"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", common.seed, "Seed for sampled checks")->capture_default_str();
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"text", "kv"}))
        ->capture_default_str();
  };

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Check certificates and report the implied class");
  check->add_option("program", ca.program, "Program file")->required();
  check->add_option("--precedence", ca.precedence, "Precedence file (otherwise one is synthesized)");
  check->add_option("--interp", ca.interp, "Max-Poly interpretation file");
  check->add_option("--set-interp", ca.set_interp, "Set interpretation file");
  check->add_option("--floor", ca.floor, "Domain floor for the interpretation (default: the file's, else 1)");
  add_common(check);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "Evaluate a ground call");
  eval->add_option("program", ea.program, "Program file")->required();
  eval->add_option("call", ea.call, "Call such as f(s(0))")->required();
  eval->add_flag("--nd", ea.nd, "Enumerate all normal forms and report the maximum");
  eval->add_flag("--memo", ea.memo, "Check cache shape against a set interpretation");
  eval->add_flag("--trace", ea.trace, "Print the call tree");
  eval->add_option("--set-interp", ea.set_interp, "Set interpretation for --memo (default: canonical)");
  eval->add_option("--max-steps", ea.max_steps, "Rewrite step budget");
  eval->add_option("--max-term-size", ea.max_term_size, "Largest term allowed");
  eval->add_option("--max-cache", ea.max_cache, "Cache entry budget (0 disables memoization)");
  add_common(eval);

  CorpusArgs co;
  auto* corpus = app.add_subcommand("corpus", "Run the acceptance criteria on the shipped fixtures");
  corpus->add_option("--fixtures", co.fixtures, "Fixture directory")->capture_default_str();
  corpus->add_option("--filter", co.filter, "Only criteria with this tag or number");
  add_common(corpus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(ca, common);
    if (*eval) return cmd_eval(ea, common);
    if (*corpus) return cmd_corpus(co, common);
  } catch (const icc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const icc::ContractError& e) {
    std::cerr << "contract violation: " << e.what() << '\n';
    return kContract;
  } catch (const icc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kAssert;
  }
  return kUsage;
}
