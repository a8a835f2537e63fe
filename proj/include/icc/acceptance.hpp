#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "icc/consfree.hpp"
#include "icc/engine.hpp"
#include "icc/maxpoly.hpp"
#include "icc/overlap.hpp"
#include "icc/parser.hpp"
#include "icc/ppo.hpp"

namespace icc {

/// Brute-force reference solvers working on their own syntax trees, with no
/// rewriting involved.
namespace oracle {

struct Literal {
  int var;  // 0-based
  bool positive;
};
using Clause = std::array<Literal, 3>;
using Cnf = std::vector<Clause>;

/// Tries every valuation of variables 0..nvars-1.
inline bool satisfiable(const Cnf& cnf, int nvars) {
  for (unsigned v = 0; v < (1u << nvars); ++v) {
    bool all = true;
    for (const Clause& c : cnf) {
      bool any = false;
      for (const Literal& l : c) any = any || (((v >> l.var) & 1u) != 0) == l.positive;
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

/// The 56 clauses of three literals over three variables, as multisets.
inline std::vector<Clause> all_clauses() {
  std::vector<Clause> out;
  auto lit = [](int k) { return Literal{k / 2, k % 2 == 0}; };
  for (int a = 0; a < 6; ++a) {
    for (int b = a; b < 6; ++b) {
      for (int c = b; c < 6; ++c) out.push_back({lit(a), lit(b), lit(c)});
    }
  }
  return out;
}

/// Every multiset of at most three clauses.
inline std::vector<Cnf> all_cnfs() {
  auto cls = all_clauses();
  std::size_t n = cls.size();
  std::vector<Cnf> out{{}};
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back({cls[i]});
    for (std::size_t j = i; j < n; ++j) {
      out.push_back({cls[i], cls[j]});
      for (std::size_t k = j; k < n; ++k) out.push_back({cls[i], cls[j], cls[k]});
    }
  }
  return out;
}

struct Qbf {
  enum class Kind { var, neg, disj, exists };
  Kind kind;
  int id = 0;  // variable or binder
  std::shared_ptr<const Qbf> left, right;

  std::string to_string() const {
    switch (kind) {
      case Kind::var: return "x" + std::to_string(id);
      case Kind::neg: return "~" + left->to_string();
      case Kind::disj: return "(" + left->to_string() + " | " + right->to_string() + ")";
      case Kind::exists: return "E x" + std::to_string(id) + "." + left->to_string();
    }
    return "?";
  }
};
using QbfPtr = std::shared_ptr<const Qbf>;

inline bool eval_qbf(const Qbf& q, unsigned env) {
  switch (q.kind) {
    case Qbf::Kind::var: return ((env >> q.id) & 1u) != 0;
    case Qbf::Kind::neg: return !eval_qbf(*q.left, env);
    case Qbf::Kind::disj: return eval_qbf(*q.left, env) || eval_qbf(*q.right, env);
    case Qbf::Kind::exists: {
      unsigned bit = 1u << q.id;
      return eval_qbf(*q.left, env & ~bit) || eval_qbf(*q.left, env | bit);
    }
  }
  return false;
}

namespace detail {

struct Partial {
  QbfPtr f;
  int next_binder;  // binders are numbered in preorder
};

/// Formulas with exactly `conn` connectives and at most `quant` binders,
/// whose variables are drawn from `scope`; binders start at `first`.
inline std::vector<Partial> gen(int conn, int quant, std::vector<int> scope, int first) {
  std::vector<Partial> out;
  auto mk = [](Qbf::Kind k, int id, QbfPtr l, QbfPtr r) {
    return std::make_shared<const Qbf>(Qbf{k, id, std::move(l), std::move(r)});
  };
  if (conn == 0) {
    for (int v : scope) out.push_back({mk(Qbf::Kind::var, v, nullptr, nullptr), first});
    return out;
  }
  for (auto& p : gen(conn - 1, quant, scope, first)) {
    out.push_back({mk(Qbf::Kind::neg, 0, p.f, nullptr), p.next_binder});
  }
  if (quant > 0) {
    auto inner = scope;
    inner.push_back(first);
    for (auto& p : gen(conn - 1, quant - 1, inner, first + 1)) {
      out.push_back({mk(Qbf::Kind::exists, first, p.f, nullptr), p.next_binder});
    }
  }
  for (int lc = 0; lc <= conn - 1; ++lc) {
    for (auto& l : gen(lc, quant, scope, first)) {
      int used = l.next_binder - first;
      for (auto& r : gen(conn - 1 - lc, quant - used, scope, l.next_binder)) {
        out.push_back({mk(Qbf::Kind::disj, 0, l.f, r.f), r.next_binder});
      }
    }
  }
  return out;
}

}  // namespace detail

/// Closed formulas with at most `max_quant` binders and `max_conn`
/// connectives (Not, Or, Exists), binders named in preorder.
inline std::vector<QbfPtr> all_closed_qbfs(int max_quant, int max_conn) {
  std::vector<QbfPtr> out;
  for (int c = 0; c <= max_conn; ++c) {
    for (auto& p : detail::gen(c, max_quant, {}, 0)) out.push_back(p.f);
  }
  return out;
}

}  // namespace oracle

/// Encodings of oracle inputs as fixture terms.
namespace encode {

/// Identifier k as a binary word of `bits` digits, most significant first.
inline Term ident(const Program& p, unsigned k, unsigned bits) {
  Term t = p.make("eps", {});
  for (unsigned i = 0; i < bits; ++i) t = p.make(((k >> i) & 1u) ? "1" : "0", {t});
  return t;
}

inline Term list(const Program& p, const std::vector<Term>& xs) {
  Term t = p.make("nil", {});
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) t = p.make("cons", {*it, t});
  return t;
}

inline Term cnf(const Program& p, const oracle::Cnf& f) {
  std::vector<Term> cls;
  for (const auto& c : f) {
    std::vector<Term> lits;
    for (const auto& l : c) lits.push_back(p.make(l.positive ? "e" : "neg", {ident(p, l.var, 2)}));
    cls.push_back(p.make("vee", lits));
  }
  return list(p, cls);
}

inline Term qbf(const Program& p, const oracle::Qbf& q) {
  using K = oracle::Qbf::Kind;
  switch (q.kind) {
    case K::var: return p.make("Var", {ident(p, q.id, 2)});
    case K::neg: return p.make("Not", {qbf(p, *q.left)});
    case K::disj: return p.make("Or", {qbf(p, *q.left), qbf(p, *q.right)});
    case K::exists: return p.make("Exists", {ident(p, q.id, 2), qbf(p, *q.left)});
  }
  throw ContractError("unknown formula node");
}

}  // namespace encode

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<std::string> tags;
  bool pass = false;
  std::string detail;
  double seconds = 0;

  std::string line() const {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(2);
    os << (pass ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << seconds << "s): " << detail;
    return os.str();
  }
};

struct AcceptanceOptions {
  std::string fixtures;
  std::string filter;  // tag or criterion number; empty runs all
  std::uint64_t seed = 1;
};

namespace acceptance {

using Clock = std::chrono::steady_clock;

inline double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Ctx {
  const AcceptanceOptions& opts;
  std::string path(const std::string& f) const { return opts.fixtures + "/" + f; }
  Program load(const std::string& f) const { return load_program(path(f)); }
};

struct Outcome {
  bool pass;
  std::string detail;
};

/// Ground calls used by the dynamic criteria, per fixture.
inline std::vector<Term> sample_calls(const Program& p, const std::string& fixture, std::mt19937_64& rng) {
  std::vector<Term> calls;
  auto pick = [&](unsigned n) { return static_cast<unsigned>(std::uniform_int_distribution<unsigned>(0, n - 1)(rng)); };
  auto boolean = [&] { return p.make(pick(2) ? "tt" : "ff", {}); };
  if (fixture == "booleans" || fixture == "membership") {
    for (int i = 0; i < 40; ++i) {
      unsigned bits = 1 + pick(4);
      std::vector<Term> xs;
      unsigned len = pick(6);
      for (unsigned k = 0; k < len; ++k) xs.push_back(encode::ident(p, pick(1u << bits), bits));
      calls.push_back(p.make("in", {encode::ident(p, pick(1u << bits), bits), encode::list(p, xs)}));
      calls.push_back(p.make("eq", {encode::ident(p, pick(1u << bits), bits), encode::ident(p, pick(1u << bits), bits)}));
      calls.push_back(p.make("ite", {boolean(), encode::ident(p, pick(4), 2), encode::ident(p, pick(4), 2)}));
      if (fixture == "booleans") {
        calls.push_back(p.make("and", {boolean(), boolean()}));
        calls.push_back(p.make("or", {boolean(), boolean()}));
      }
    }
  } else if (fixture == "first-n") {
    Term n = p.make("0", {});
    for (int k = 0; k <= 12; ++k) {
      calls.push_back(p.make("f", {n}));
      n = p.make("s", {n});
    }
  } else if (fixture == "cf-last") {
    for (int i = 0; i < 20; ++i) {
      std::vector<Term> xs;
      unsigned len = 1 + pick(6);
      for (unsigned k = 0; k < len; ++k) xs.push_back(p.make(pick(2) ? "a" : "b", {}));
      calls.push_back(p.make("last", {encode::list(p, xs)}));
    }
  } else if (fixture == "cf-parity") {
    Term n = p.make("0", {});
    for (int k = 0; k <= 10; ++k) {
      calls.push_back(p.make("even", {n, p.make("tt", {}), p.make("ff", {})}));
      n = p.make("s", {n});
    }
  } else if (fixture == "cf-pick") {
    const char* names[] = {"a", "b", "c"};
    for (int i = 0; i < 20; ++i) {
      std::vector<Term> xs;
      unsigned len = 1 + pick(5);
      for (unsigned k = 0; k < len; ++k) xs.push_back(p.make(names[pick(3)], {}));
      calls.push_back(p.make("pick", {encode::list(p, xs)}));
    }
  }
  return calls;
}

inline std::vector<std::string> unoriented(const Program& p, const PpoReport& r) {
  std::vector<std::string> out;
  for (const auto& v : r.rules) {
    if (!v.oriented) out.push_back(std::to_string(v.rule + 1) + ":" + to_string(p.rules()[v.rule].lhs));
  }
  return out;
}

inline Outcome ppo_fixture(const Ctx& c) {
  std::ostringstream d;
  bool pass = true;
  auto t0 = Clock::now();
  Precedence chain = load_precedence(c.path("qbf.prec"));
  Precedence reversed = load_precedence(c.path("qbf.reversed.prec"));
  for (const char* f : {"qbf.trs", "qbf.published.trs"}) {
    Program p = c.load(f);
    auto ok = check_ppo(p, chain);
    auto rev = check_ppo(p, reversed);
    bool replay = true;
    for (const auto& v : ok.rules) {
      if (v.witness) replay = replay && replay_witness(*v.witness, chain);
    }
    auto missing = unoriented(p, ok);
    d << f << ": chain " << (ok.ok ? "accepted" : "rejected");
    if (!missing.empty()) {
      d << " (unoriented rules";
      for (const auto& m : missing) d << " " << m;
      d << ")";
    }
    d << ", reversed " << (rev.ok ? "accepted" : "rejected") << "; ";
    pass = pass && ok.ok && !rev.ok && replay;
    if (!replay) d << "witness replay failed; ";
  }
  double s = since(t0);
  d << "time " << s << "s";
  return {pass && s < 1.0, d.str()};
}

inline Outcome interp_fixture(const Ctx& c) {
  std::ostringstream d;
  bool pass = true;
  auto run = [&](const char* prog, const char* interp, auto&& judge) {
    auto t0 = Clock::now();
    Program p = c.load(prog);
    Interpretation in = load_interpretation(c.path(interp), &p);
    SampleOptions so;
    so.seed = c.opts.seed;
    InterpReport r = classify_interp(p, in, so);
    double s = since(t0);
    d << prog << ": " << to_string(r.cls) << (r.additive ? "+additive" : "") << ", ";
    bool ok = judge(p, r) && r.unknown_count() == 0 && s < 1.0;
    d << "unknown=" << r.unknown_count() << ", " << s << "s; ";
    pass = pass && ok;
  };
  auto all_verified = [](const std::vector<RuleVerdict>& vs) {
    return std::all_of(vs.begin(), vs.end(), [](const RuleVerdict& v) { return v.verdict.verified(); });
  };
  run("booleans.trs", "booleans.interp", [&](const Program& p, const InterpReport& r) {
    d << p.rules().size() << " rules strictly decreasing " << (all_verified(r.strict_rules) ? "(all)" : "(NOT all)")
      << ", ";
    return r.cls == InterpClass::strict && r.additive && all_verified(r.strict_rules);
  });
  run("qbf.trs", "qbf.interp",
      [&](const Program&, const InterpReport& r) { return r.cls == InterpClass::quasi && r.additive; });
  run("sat3.trs", "sat3.interp", [&](const Program& p, const InterpReport& r) {
    d << p.rules().size() << " rules strictly decreasing " << (all_verified(r.strict_rules) ? "(all)" : "(NOT all)")
      << ", ";
    return all_verified(r.strict_rules);
  });
  // the published QBF interpretation is kept as a known-bad reference
  Program qp = c.load("qbf.published.trs");
  InterpReport published = classify_interp(qp, load_interpretation(c.path("qbf.published.interp"), &qp));
  d << "published qbf interpretation: " << to_string(published.cls) << " (weak compatibility fails on rules";
  for (const auto& v : published.weak_rules) {
    if (v.verdict.falsified()) d << " " << v.rule + 1;
  }
  d << ")";
  return {pass, d.str()};
}

inline Outcome sat_sweep(const Ctx& c) {
  auto t0 = Clock::now();
  Program p = c.load("sat3.trs");
  auto cnfs = oracle::all_cnfs();
  Evaluator ev(p);
  std::size_t agree = 0, sat = 0;
  std::string first_bad;
  for (std::size_t i = 0; i < cnfs.size(); ++i) {
    if (i % 2048 == 0) ev.clear_cache();
    bool expected = oracle::satisfiable(cnfs[i], 3);
    auto r = ev.evaluate_nd(p.make("f", {encode::cnf(p, cnfs[i])}));
    auto best = max_value(r.values);
    bool got = best && best->name() == "tt";
    bool ok = !r.incomplete && best && got == expected;
    if (ok) {
      ++agree;
    } else if (first_bad.empty()) {
      first_bad = to_string(encode::cnf(p, cnfs[i])) + " expected " + (expected ? "tt" : "ff") + " got " +
                  (best ? to_string(*best) : std::string("nothing"));
    }
    sat += expected;
  }
  double s = since(t0);
  std::ostringstream d;
  d << agree << "/" << cnfs.size() << " formulas agree (" << sat << " satisfiable), " << s << "s";
  if (!first_bad.empty()) d << "; first mismatch: " << first_bad;
  return {agree == cnfs.size() && s < 300, d.str()};
}

inline Outcome qbf_sweep(const Ctx& c) {
  auto t0 = Clock::now();
  Program p = c.load("qbf.trs");
  auto fs = oracle::all_closed_qbfs(3, 7);
  Evaluator ev(p);
  std::size_t agree = 0, truths = 0;
  std::string first_bad;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i % 2048 == 0) ev.clear_cache();
    bool expected = oracle::eval_qbf(*fs[i], 0);
    auto r = ev.evaluate_nd(p.make("f", {encode::qbf(p, *fs[i])}));
    auto best = max_value(r.values);
    bool rooted = best && (best->name() == "T" || best->name() == "F");
    bool ok = !r.incomplete && rooted && (best->name() == "T") == expected;
    if (ok) {
      ++agree;
    } else if (first_bad.empty()) {
      first_bad = fs[i]->to_string() + " expected " + (expected ? "T" : "F") + " got " +
                  (best ? to_string(*best) : std::string("nothing")) + " (" + to_string(r.stats.status) + ")";
    }
    truths += expected;
  }
  double s = since(t0);
  std::ostringstream d;
  d << agree << "/" << fs.size() << " closed formulas agree (" << truths << " true), " << s << "s";
  if (!first_bad.empty()) d << "; first mismatch: " << first_bad;
  return {agree == fs.size() && s < 600, d.str()};
}

inline double loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += std::log(xs[i]);
    my += std::log(ys[i]);
  }
  mx /= static_cast<double>(xs.size());
  my /= static_cast<double>(xs.size());
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (std::log(xs[i]) - mx) * (std::log(ys[i]) - my);
    sxx += (std::log(xs[i]) - mx) * (std::log(xs[i]) - mx);
  }
  return sxy / sxx;
}

inline Outcome cache_growth(const Ctx& c) {
  Program p = c.load("membership.trs");
  SetInterpretation si = load_set_interpretation(c.path("membership.setinterp"), p);
  std::ostringstream d;
  std::vector<double> ns, absent, present;
  std::size_t violations = 0, checked = 0;
  for (unsigned n : {8u, 16u, 32u}) {
    std::vector<Term> xs;
    for (unsigned k = 0; k < n; ++k) xs.push_back(encode::ident(p, k, 6));
    Term list = encode::list(p, xs);
    auto miss = eval_memo(p, si, *p.require("in"), {encode::ident(p, 63, 6), list});
    auto hit = eval_memo(p, si, *p.require("in"), {encode::ident(p, n - 1, 6), list});
    for (const auto* m : {&miss, &hit}) {
      violations += m->assertions.violations.size();
      checked += m->assertions.checked_entries;
    }
    ns.push_back(n);
    absent.push_back(static_cast<double>(miss.stats.cache_entries));
    present.push_back(static_cast<double>(hit.stats.cache_entries));
    d << "n=" << n << ": " << miss.stats.cache_entries << "/" << hit.stats.cache_entries << " entries; ";
  }
  double e1 = loglog_slope(ns, absent), e2 = loglog_slope(ns, present);
  d << "exponents " << e1 << " (absent) " << e2 << " (last); " << checked << " entries checked, " << violations
    << " subterm violations";
  return {e1 <= 2.5 && e2 <= 2.5 && violations == 0, d.str()};
}

inline Outcome canonical_soundness(const Ctx& c) {
  std::ostringstream d;
  bool pass = true;
  for (const char* f : {"cf-last.trs", "cf-parity.trs", "cf-pick.trs"}) {
    Program p = c.load(f);
    PreservationOptions po;
    po.seed = c.opts.seed;
    auto r = check_constructor_preserving(p, canonical_interp(p), po);
    std::size_t total = 0;
    for (auto k : r.checked) total += k;
    d << f << ": " << to_string(r.status) << " (" << total << " substitutions); ";
    if (!r.verified()) {
      const auto& v = r.violations.front();
      d << "rule " << v.rule + 1 << " counterexample " << to_string(v.offending) << "; ";
    }
    pass = pass && r.verified() && r.samples_per_rule == 200;
  }
  return {pass, d.str() + "200 samples per rule, seed " + std::to_string(c.opts.seed)};
}

struct SetFixture {
  const char* program;
  const char* set_interp;  // nullptr: canonical
  const char* name;
};

inline const std::vector<SetFixture>& set_fixtures() {
  static const std::vector<SetFixture> v{{"booleans.trs", "booleans.setinterp", "booleans"},
                                         {"membership.trs", "membership.setinterp", "membership"},
                                         {"first-n.trs", "first-n.setinterp", "first-n"},
                                         {"cf-last.trs", nullptr, "cf-last"},
                                         {"cf-parity.trs", nullptr, "cf-parity"},
                                         {"cf-pick.trs", nullptr, "cf-pick"}};
  return v;
}

inline Outcome normal_form_membership(const Ctx& c) {
  std::ostringstream d;
  std::mt19937_64 rng(c.opts.seed);
  std::size_t calls = 0, results = 0, outside = 0, cache_bad = 0, not_preserving = 0;
  std::string first;
  for (const auto& fx : set_fixtures()) {
    Program p = c.load(fx.program);
    SetInterpretation si = fx.set_interp ? load_set_interpretation(c.path(fx.set_interp), p) : canonical_interp(p);
    PreservationOptions po;
    po.seed = c.opts.seed;
    if (!check_constructor_preserving(p, si, po).verified()) ++not_preserving;
    for (const Term& call : sample_calls(p, fx.name, rng)) {
      std::vector<Term> args(call.args().begin(), call.args().end());
      ++calls;
      MemoAssertions a;
      if (p.mode == Mode::nondeterministic) {
        auto r = eval_memo_nd(p, si, call.symbol(), args);
        results += r.values.size();
        a = r.assertions;
      } else {
        auto r = eval_memo(p, si, call.symbol(), args);
        results += r.value ? 1 : 0;
        a = r.assertions;
      }
      if (!a.result_in_interpretation) {
        ++outside;
        if (first.empty()) first = to_string(call);
      }
      cache_bad += a.violations.size() - (a.result_in_interpretation ? 0 : 1);
    }
  }
  d << calls << " calls over " << set_fixtures().size() << " fixtures, " << results << " normal forms, " << outside
    << " outside the interpretation, " << cache_bad << " cache-shape violations";
  if (not_preserving) d << ", " << not_preserving << " set interpretation(s) failed the preservation check";
  if (!first.empty()) d << "; first: " << first;
  return {outside == 0 && cache_bad == 0 && not_preserving == 0 && calls > 0, d.str()};
}

inline Outcome confluence(const Ctx& c) {
  std::ostringstream d;
  std::mt19937_64 rng(c.opts.seed);
  bool pass = true;
  std::size_t fixtures = 0;
  const char* all[] = {"booleans", "membership", "first-n", "cf-last", "cf-parity", "cf-pick", "sat3", "qbf"};
  for (const char* name : all) {
    Program p = c.load(std::string(name) + ".trs");
    auto ov = detect_overlaps(p);
    if (!ov.pairs.empty() || !ov.nonlinear_rules.empty()) {
      d << name << ": overlapping, skipped; ";
      continue;
    }
    ++fixtures;
    auto calls = sample_calls(p, name, rng);
    std::vector<std::optional<Term>> base;
    Evaluator ev(p);
    std::size_t non_singleton = 0;
    for (const Term& t : calls) {
      base.push_back(ev.evaluate(t).value);
      if (ev.evaluate_nd(t).values.size() != 1) ++non_singleton;
    }
    std::size_t differ = 0;
    for (int k = 0; k < 20; ++k) {
      Program q = p;
      std::vector<Rule> rules = q.rules();
      std::shuffle(rules.begin(), rules.end(), rng);
      q.set_rules(std::move(rules));
      Evaluator eq(q);
      for (std::size_t i = 0; i < calls.size(); ++i) {
        auto v = eq.evaluate(calls[i]).value;
        if (v.has_value() != base[i].has_value() || (v && !(*v == *base[i]))) ++differ;
      }
    }
    d << name << ": " << calls.size() << " calls x 20 orders, " << differ << " differences, " << non_singleton
      << " non-singleton; ";
    pass = pass && differ == 0 && non_singleton == 0 && !calls.empty();
  }
  d << fixtures << " orthogonal fixtures";
  return {pass && fixtures > 0, d.str()};
}

inline Outcome monotone_decrease(const Ctx& c) {
  Program p = c.load("booleans.trs");
  Interpretation in = load_interpretation(c.path("booleans.interp"), &p);
  std::mt19937_64 rng(c.opts.seed);
  std::size_t steps = 0, bad = 0;
  std::string first;
  Evaluator ev(p);
  ev.set_observer([&](std::size_t rule, const Term& u, const Term& v) {
    ++steps;
    Rational a = interp_value(in, u), b = interp_value(in, v);
    if (!(a > b)) {
      ++bad;
      if (first.empty()) {
        first = "rule " + std::to_string(rule + 1) + ": " + to_string(u) + " (" + to_string(a) + ") -> " +
                to_string(v) + " (" + to_string(b) + ")";
      }
    }
  });
  auto calls = sample_calls(p, "booleans", rng);
  for (const Term& t : calls) {
    ev.clear_cache();
    ev.evaluate(t);
  }
  std::ostringstream d;
  d << calls.size() << " runs, " << steps << " rewrite steps, " << bad << " without strict decrease";
  if (!first.empty()) d << "; first: " << first;
  return {bad == 0 && steps > 0, d.str()};
}

struct Criterion {
  int id;
  const char* title;
  std::vector<std::string> tags;
  std::function<Outcome(const Ctx&)> run;
};

inline const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "PPO fixture check", {"ppo", "qbf"}, ppo_fixture},
      {2, "interpretation fixture checks", {"interp", "booleans", "qbf", "sat3"}, interp_fixture},
      {3, "3-SAT differential sweep", {"sat3", "nd", "differential"}, sat_sweep},
      {4, "QBF differential sweep", {"qbf", "nd", "differential"}, qbf_sweep},
      {5, "cache polynomiality evidence", {"memo", "membership"}, cache_growth},
      {6, "canonical interpretation soundness", {"consfree"}, canonical_soundness},
      {7, "normal-form membership", {"consfree", "memo"}, normal_form_membership},
      {8, "orthogonality and confluence", {"confluence", "engine"}, confluence},
      {9, "monotone decrease along executed steps", {"interp", "booleans"}, monotone_decrease},
  };
  return all;
}

}  // namespace acceptance

inline bool criterion_selected(int id, const std::vector<std::string>& tags, const std::string& filter) {
  if (filter.empty() || filter == std::to_string(id)) return true;
  return std::find(tags.begin(), tags.end(), filter) != tags.end();
}

/// Runs the selected criteria in order, reporting each as it finishes.
inline std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                                   const std::function<void(const CriterionResult&)>& on_result = {}) {
  std::vector<CriterionResult> out;
  acceptance::Ctx ctx{opts};
  for (const auto& c : acceptance::criteria()) {
    if (!criterion_selected(c.id, c.tags, opts.filter)) continue;
    CriterionResult r{c.id, c.title, c.tags, false, "", 0};
    auto t0 = acceptance::Clock::now();
    try {
      auto o = c.run(ctx);
      r.pass = o.pass;
      r.detail = o.detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = acceptance::since(t0);
    if (on_result) on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace icc
