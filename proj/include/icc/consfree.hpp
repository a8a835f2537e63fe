#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "icc/engine.hpp"
#include "icc/error.hpp"
#include "icc/parser.hpp"
#include "icc/program.hpp"
#include "icc/term.hpp"
#include "icc/verdict.hpp"
#include "icc/wellformed.hpp"

namespace icc {

/// Finite set of ground constructor terms, kept sorted and duplicate free.
class TermSet {
 public:
  TermSet() = default;
  TermSet(std::initializer_list<Term> ts) : TermSet(std::vector<Term>(ts)) {}
  explicit TermSet(std::vector<Term> ts) : elems_(std::move(ts)) { normalize(); }

  static TermSet singleton(Term t) { return TermSet(std::vector<Term>{std::move(t)}); }

  bool empty() const noexcept { return elems_.empty(); }
  std::size_t cardinality() const noexcept { return elems_.size(); }
  const std::vector<Term>& elements() const noexcept { return elems_; }
  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  bool contains(const Term& t) const {
    return std::binary_search(elems_.begin(), elems_.end(), t, StructuralLess{});
  }
  bool subset_of(const TermSet& o) const {
    return std::includes(o.elems_.begin(), o.elems_.end(), elems_.begin(), elems_.end(), StructuralLess{});
  }

  TermSet& operator|=(const TermSet& o) {
    std::vector<Term> out;
    out.reserve(elems_.size() + o.elems_.size());
    std::set_union(elems_.begin(), elems_.end(), o.elems_.begin(), o.elems_.end(), std::back_inserter(out),
                   StructuralLess{});
    elems_ = std::move(out);
    return *this;
  }
  friend TermSet operator|(TermSet a, const TermSet& b) { return a |= b; }
  friend bool operator==(const TermSet& a, const TermSet& b) { return a.elems_ == b.elems_; }

  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (i) out += ", ";
      out += icc::to_string(elems_[i]);
    }
    return out + "}";
  }

 private:
  void normalize() {
    std::sort(elems_.begin(), elems_.end(), StructuralLess{});
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  }
  std::vector<Term> elems_;
};

/// Sum of the sizes of the elements.
inline std::size_t set_size(const TermSet& m) {
  std::size_t n = 0;
  for (const Term& t : m) n += t.size();
  return n;
}

/// Every element of m is a subterm of some element of m2.
inline bool sts_leq(const TermSet& m, const TermSet& m2) {
  for (const Term& t : m) {
    bool found = false;
    for (const Term& u : m2) {
      if (is_subterm(t, u)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

/// { c(t1,...,tk) | ti in ms[i] }.
inline TermSet constructor_image(const SymbolRef& c, const std::vector<TermSet>& ms) {
  if (!c || !c->is_constructor()) throw ContractError("constructor_image: not a constructor");
  if (ms.size() != c->arity) {
    throw ContractError("constructor_image: '" + c->name + "' takes " + std::to_string(c->arity) + " sets, got " +
                        std::to_string(ms.size()));
  }
  std::vector<Term> out;
  for (const auto& m : ms) {
    if (m.empty()) return TermSet{};
  }
  std::vector<std::size_t> idx(ms.size(), 0);
  while (true) {
    std::vector<Term> args;
    args.reserve(ms.size());
    for (std::size_t i = 0; i < ms.size(); ++i) args.push_back(ms[i].elements()[idx[i]]);
    out.push_back(Term::apply(c, std::move(args)));
    std::size_t k = 0;
    for (; k < ms.size(); ++k) {
      if (++idx[k] < ms[k].cardinality()) break;
      idx[k] = 0;
    }
    if (k == ms.size()) break;
  }
  return TermSet(std::move(out));
}

/// All subterms of all elements of every m_i.
inline TermSet subterm_closure(const std::vector<TermSet>& ms) {
  TermHashSet subs;
  for (const auto& m : ms) {
    for (const Term& t : m) collect_subterms(t, subs);
  }
  return TermSet(std::vector<Term>(subs.begin(), subs.end()));
}

/// Interpretation of terms as sets of constructor terms: constructors act
/// pointwise, each function has a generator.
class SetInterpretation {
 public:
  using Generator = std::function<TermSet(const std::vector<TermSet>&)>;

  explicit SetInterpretation(Program p) : prog_(std::move(p)) {}

  const Program& program() const noexcept { return prog_; }

  /// Largest set a generator may return; larger results raise Error.
  std::size_t ceiling = 100'000;

  void assign(const std::string& f, Generator g, std::string description) {
    SymbolRef s = prog_.require(f);
    if (!s->is_function()) throw ContractError("'" + f + "' is a constructor; its interpretation is fixed");
    gens_[f] = {std::move(g), std::move(description)};
  }
  bool has(const std::string& f) const { return gens_.count(f) != 0; }
  const std::string& description(const std::string& f) const { return at(f).description; }

  std::vector<std::string> missing() const {
    std::vector<std::string> out;
    for (const auto& f : prog_.functions()) {
      if (!has(f->name)) out.push_back(f->name);
    }
    return out;
  }

  /// Value of the symbol on argument sets.
  TermSet apply(const Symbol& s, const std::vector<TermSet>& ms) const {
    if (s.is_constructor()) return constructor_image(prog_.require(s.name), ms);
    if (ms.size() != s.arity) throw ContractError("'" + s.name + "' applied to the wrong number of sets");
    TermSet r = at(s.name).gen(ms);
    if (r.cardinality() > ceiling) {
      throw Error("interpretation of '" + s.name + "' produced " + std::to_string(r.cardinality()) +
                  " terms, above the ceiling of " + std::to_string(ceiling));
    }
    return r;
  }

  /// [[t]] for a ground term t.
  TermSet eval(const Term& t) const {
    if (t.is_variable()) throw ContractError("SetInterpretation::eval: variable '" + t.name() + "'");
    if (t.is_ground_constructor()) return TermSet::singleton(t);
    std::vector<TermSet> ms;
    ms.reserve(t.arity());
    for (const Term& a : t.args()) ms.push_back(eval(a));
    return apply(t.symbol(), ms);
  }

 private:
  struct Entry {
    Generator gen;
    std::string description;
  };
  const Entry& at(const std::string& f) const {
    auto it = gens_.find(f);
    if (it == gens_.end()) throw ContractError("no set interpretation for '" + f + "'");
    return it->second;
  }

  Program prog_;
  std::unordered_map<std::string, Entry> gens_;
};

namespace gen {

inline SetInterpretation::Generator subterm_closure() {
  return [](const std::vector<TermSet>& ms) { return icc::subterm_closure(ms); };
}

/// Union of the listed argument sets (0-based) and fixed constants.
inline SetInterpretation::Generator union_of(std::vector<std::size_t> positions, std::vector<Term> constants) {
  return [positions = std::move(positions), constants = std::move(constants)](const std::vector<TermSet>& ms) {
    TermSet out{std::vector<Term>(constants)};
    for (std::size_t i : positions) out |= ms.at(i);
    return out;
  };
}

/// {chain(t) | t in m}, where chain(succ(u)) = cons(u, chain(u)) and
/// chain(v) = nil for any other v.
inline SetInterpretation::Generator predecessor_chains(SymbolRef succ, SymbolRef cons, SymbolRef nil) {
  return [=](const std::vector<TermSet>& ms) {
    std::vector<Term> out;
    for (const Term& t : ms.at(0)) {
      std::vector<Term> preds;
      for (Term u = t; !u.is_variable() && same_symbol(u.symbol(), *succ); u = u.args()[0]) {
        preds.push_back(u.args()[0]);
      }
      Term acc = Term::constant(nil);
      for (auto it = preds.rbegin(); it != preds.rend(); ++it) acc = Term::apply(cons, {*it, acc});
      out.push_back(acc);
    }
    return TermSet(std::move(out));
  };
}

/// Lists cons(n1, cons(n2, ... nil)) with every nj in m and
/// nj = succ(n(j+1)), plus nil.
inline SetInterpretation::Generator descending_chains(SymbolRef succ, SymbolRef cons, SymbolRef nil) {
  return [=](const std::vector<TermSet>& ms) {
    const TermSet& m = ms.at(0);
    Term empty = Term::constant(nil);
    // chains starting at each element, built from the bottom up
    std::map<Term, std::vector<Term>, StructuralLess> from;
    std::vector<Term> order(m.begin(), m.end());
    std::sort(order.begin(), order.end(), [](const Term& a, const Term& b) { return a.size() < b.size(); });
    std::vector<Term> out{empty};
    for (const Term& n : order) {
      std::vector<Term> lists{Term::apply(cons, {n, empty})};
      if (same_symbol(n.symbol(), *succ) && m.contains(n.args()[0])) {
        for (const Term& tail : from[n.args()[0]]) lists.push_back(Term::apply(cons, {n, tail}));
      }
      out.insert(out.end(), lists.begin(), lists.end());
      from[n] = std::move(lists);
    }
    return TermSet(std::move(out));
  };
}

}  // namespace gen

/// Every function maps to the subterm closure of its arguments. Only
/// sound for cons-free programs, so others are rejected.
inline SetInterpretation canonical_interp(const Program& p) {
  auto cf = is_cons_free(p);
  if (!cf.cons_free) {
    const auto& v = cf.violations.front();
    throw ContractError("program is not cons-free: rule " + std::to_string(v.rule + 1) + " builds " +
                        to_string(v.subterm) + " at " + to_string(v.position));
  }
  SetInterpretation si(p);
  for (const auto& f : p.functions()) si.assign(f->name, gen::subterm_closure(), "subterm-closure");
  return si;
}

/// Lines `f := subterm-closure` or `f := custom <generator> args...`.
/// Generators: `union <positions and nullary constructors>`,
/// `predecessor-chains [succ cons nil]`, `descending-chains succ cons nil`.
inline SetInterpretation parse_set_interpretation(std::string_view text, const Program& p) {
  SetInterpretation si(p);
  auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string line = lines[ln];
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::vector<std::pair<std::string, std::size_t>> toks;
    for (std::size_t i = 0; i < line.size();) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      if (line.compare(i, 2, ":=") == 0) {
        j = i + 2;
      } else {
        while (j < line.size() && (is_ident_char(line[j]) || line[j] == '-')) ++j;
        if (j == i) throw ParseError(ln + 1, i + 1, std::string("unexpected character '") + line[i] + "'");
      }
      toks.emplace_back(line.substr(i, j - i), i + 1);
      i = j;
    }
    if (toks.empty()) continue;
    auto fail = [&](std::size_t k, const std::string& msg) {
      std::size_t col = k < toks.size() ? toks[k].second : line.size() + 1;
      throw ParseError(ln + 1, col, msg);
    };
    if (toks.size() < 3 || toks[1].first != ":=") fail(1, "expected `name := interpretation`");
    const std::string& f = toks[0].first;
    SymbolRef fs = p.find(f);
    if (!fs) fail(0, "unknown symbol '" + f + "'");
    if (!fs->is_function()) fail(0, "'" + f + "' is a constructor");
    if (si.has(f)) fail(0, "'" + f + "' interpreted twice");
    auto constructor = [&](std::size_t k, std::size_t arity) {
      if (k >= toks.size()) fail(k, "expected a constructor name");
      SymbolRef c = p.find(toks[k].first);
      if (!c || !c->is_constructor() || c->arity != arity) {
        fail(k, "expected a constructor of arity " + std::to_string(arity));
      }
      return c;
    };
    std::string kind = toks[2].first;
    std::string desc;
    for (std::size_t k = 2; k < toks.size(); ++k) desc += (k > 2 ? " " : "") + toks[k].first;
    if (kind == "subterm-closure") {
      if (toks.size() != 3) fail(3, "subterm-closure takes no arguments");
      si.assign(f, gen::subterm_closure(), desc);
      continue;
    }
    if (kind != "custom") fail(2, "expected subterm-closure or custom");
    if (toks.size() < 4) fail(4, "expected a generator name");
    const std::string& g = toks[3].first;
    if (g == "union") {
      std::vector<std::size_t> positions;
      std::vector<Term> constants;
      for (std::size_t k = 4; k < toks.size(); ++k) {
        const std::string& a = toks[k].first;
        bool digits = std::all_of(a.begin(), a.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
        if (digits && std::stoul(a) >= 1 && std::stoul(a) <= fs->arity) {
          positions.push_back(std::stoul(a) - 1);
        } else {
          constants.push_back(Term::constant(constructor(k, 0)));
        }
      }
      if (positions.empty() && constants.empty()) fail(4, "union needs at least one position or constant");
      si.assign(f, gen::union_of(std::move(positions), std::move(constants)), desc);
    } else if (g == "predecessor-chains" || g == "descending-chains") {
      if (fs->arity != 1) fail(0, g + " needs a unary function");
      SymbolRef succ, cons, nil;
      if (toks.size() == 4 && g == "predecessor-chains") {
        succ = p.find("s");
        cons = p.find("cons");
        nil = p.find("nil");
        if (!succ || !cons || !nil) fail(3, "default constructors s/1, cons/2, nil/0 are not all declared");
      } else {
        if (toks.size() != 7) fail(toks.size() < 7 ? toks.size() : 7, "expected `" + g + " succ cons nil`");
        succ = constructor(4, 1);
        cons = constructor(5, 2);
        nil = constructor(6, 0);
      }
      si.assign(f, g == "predecessor-chains" ? gen::predecessor_chains(succ, cons, nil)
                                             : gen::descending_chains(succ, cons, nil),
                desc);
    } else {
      fail(3, "unknown generator '" + g + "'");
    }
  }
  auto miss = si.missing();
  if (!miss.empty()) {
    std::string all;
    for (const auto& m : miss) all += (all.empty() ? "" : ", ") + m;
    throw ParseError(lines.size(), 1, "no set interpretation for: " + all);
  }
  return si;
}

inline SetInterpretation load_set_interpretation(const std::string& path, const Program& p) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_set_interpretation(ss.str(), p);
}

/// Uniform-ish random ground constructor term with at most `max_size` nodes.
inline Term random_constructor_term(const std::vector<SymbolRef>& constructors, std::mt19937_64& rng,
                                    std::size_t max_size) {
  std::vector<SymbolRef> leaves;
  for (const auto& c : constructors) {
    if (c->arity == 0) leaves.push_back(c);
  }
  if (leaves.empty()) throw ContractError("no nullary constructor: ground constructor terms do not exist");
  std::function<Term(std::size_t)> build = [&](std::size_t budget) -> Term {
    std::vector<SymbolRef> fit;
    for (const auto& c : constructors) {
      if (c->arity + 1 <= budget) fit.push_back(c);
    }
    SymbolRef c = fit[std::uniform_int_distribution<std::size_t>(0, fit.size() - 1)(rng)];
    if (c->arity == 0) return Term::constant(c);
    // split budget - 1 among the children, each getting at least one node
    std::size_t rest = budget - 1 - c->arity;
    std::vector<std::size_t> share(c->arity, 1);
    for (; rest > 0; --rest) {
      if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) break;
      ++share[std::uniform_int_distribution<std::size_t>(0, c->arity - 1)(rng)];
    }
    std::vector<Term> args;
    for (std::size_t s : share) args.push_back(build(s));
    return Term::apply(c, std::move(args));
  };
  std::size_t target = std::uniform_int_distribution<std::size_t>(1, std::max<std::size_t>(1, max_size))(rng);
  return build(target);
}

struct PreservationViolation {
  std::size_t rule;
  Substitution sigma;
  Term subterm;     // rhs subterm u
  Term offending;   // element of [[sigma(u)]] with no cover
  bool subset = false;  // true when the failure is [[sigma(r)]] not within [[sigma(l)]]
};

struct PreservationReport {
  VerdictStatus status = VerdictStatus::verified;
  std::size_t samples_per_rule = 0;
  std::size_t max_term_size = 0;
  std::size_t ceiling = 0;
  std::vector<std::size_t> checked;  // substitutions tried per rule
  std::vector<PreservationViolation> violations;  // first one per failing rule

  bool verified() const noexcept { return status == VerdictStatus::verified; }
  bool rule_ok(std::size_t r) const {
    for (const auto& v : violations) {
      if (v.rule == r) return false;
    }
    return true;
  }
};

struct PreservationOptions {
  std::size_t samples = 200;
  std::size_t max_term_size = 12;
  std::uint64_t seed = 0;
};

/// Samples ground substitutions per rule and checks, for every rhs subterm u,
/// [[s(u)]] is covered (via subterms) by [[s(lhs)]] together with the s(p_i),
/// and that [[s(rhs)]] is a subset of [[s(lhs)]]. Statistical evidence only.
inline PreservationReport check_constructor_preserving(const Program& p, const SetInterpretation& si,
                                                       const PreservationOptions& opts = {}) {
  auto miss = si.missing();
  if (!miss.empty()) throw ContractError("set interpretation is not total: '" + miss.front() + "' is missing");
  PreservationReport rep;
  rep.samples_per_rule = opts.samples;
  rep.max_term_size = opts.max_term_size;
  rep.ceiling = si.ceiling;
  std::mt19937_64 rng(opts.seed);
  for (std::size_t ri = 0; ri < p.rules().size(); ++ri) {
    const Rule& r = p.rules()[ri];
    auto vars = variables(r.lhs);
    std::size_t tried = 0;
    std::optional<PreservationViolation> bad;
    for (std::size_t k = 0; k < opts.samples && !bad; ++k) {
      Substitution sigma;
      for (const auto& v : vars) sigma.emplace(v, random_constructor_term(p.constructors(), rng, opts.max_term_size));
      ++tried;
      Term lhs = substitute(r.lhs, sigma);
      TermSet top = si.eval(lhs);
      TermSet cover = top;
      for (const Term& a : lhs.args()) cover |= si.eval(a);
      for_each_subterm(r.rhs, [&](const Term& u, const Position&) {
        if (bad) return;
        TermSet val = si.eval(substitute(u, sigma));
        for (const Term& t : val) {
          bool ok = false;
          for (const Term& c : cover) {
            if (is_subterm(t, c)) {
              ok = true;
              break;
            }
          }
          if (!ok) {
            bad = PreservationViolation{ri, sigma, u, t, false};
            return;
          }
        }
      });
      if (bad) break;
      TermSet rv = si.eval(substitute(r.rhs, sigma));
      if (!rv.subset_of(top)) {
        for (const Term& t : rv) {
          if (!top.contains(t)) {
            bad = PreservationViolation{ri, sigma, r.rhs, t, true};
            break;
          }
        }
      }
    }
    rep.checked.push_back(tried);
    if (bad) rep.violations.push_back(std::move(*bad));
  }
  rep.status = rep.violations.empty() ? VerdictStatus::verified : VerdictStatus::falsified;
  return rep;
}

/// Runtime checks made by the memo evaluators.
struct MemoAssertions {
  std::size_t witness_terms = 0;  // |[[f(t)]]| plus the inputs
  std::size_t witness_subterms = 0;
  std::size_t checked_entries = 0;
  std::vector<std::string> violations;
  bool result_in_interpretation = true;

  bool ok() const noexcept { return violations.empty() && result_in_interpretation; }
};

struct MemoOutcome {
  std::optional<Term> value;
  EvalStats stats;
  std::vector<CacheEntry> cache;
  MemoAssertions assertions;
};

struct MemoNdOutcome {
  std::vector<Term> values;
  bool incomplete = false;
  EvalStats stats;
  std::vector<CacheEntry> cache;
  MemoAssertions assertions;
};

namespace detail {

class WitnessSet {
 public:
  WitnessSet(const TermSet& top, const std::vector<Term>& args, MemoAssertions& a) {
    std::vector<Term> roots(top.begin(), top.end());
    roots.insert(roots.end(), args.begin(), args.end());
    a.witness_terms = top.cardinality() + args.size();
    for (const Term& r : roots) collect_subterms(r, subs_);
    a.witness_subterms = subs_.size();
  }
  bool covers(const Term& t) const { return subs_.count(t) != 0; }

 private:
  TermHashSet subs_;
};

inline void check_entry(const WitnessSet& w, const CacheEntry& e, MemoAssertions& a) {
  ++a.checked_entries;
  for (const Term& x : e.args) {
    if (!w.covers(x)) {
      a.violations.push_back("cache key " + e.function->name + " has argument " + to_string(x) +
                             " outside the witness set");
    }
  }
  for (const Term& v : e.values) {
    if (!w.covers(v)) {
      a.violations.push_back("cache value " + to_string(v) + " of " + e.function->name +
                             " lies outside the witness set");
    }
  }
}

}  // namespace detail

/// Memoized call-by-value evaluation of f(args), asserting that the cache
/// stays within the subterms of [[f(args)]] and the inputs, and that the
/// result belongs to [[f(args)]].
inline MemoOutcome eval_memo(const Program& p, const SetInterpretation& si, const Symbol& f, std::vector<Term> args,
                             const EvalBudget& budget = {}) {
  Term call = detail::make_call(p, f, args);
  MemoOutcome out;
  TermSet top = si.eval(call);
  detail::WitnessSet w(top, args, out.assertions);
  Evaluator ev(p, budget);
  auto r = ev.evaluate(call);
  out.value = r.value;
  out.stats = r.stats;
  out.cache = ev.snapshot(false);
  for (const auto& e : out.cache) detail::check_entry(w, e, out.assertions);
  if (out.value && !top.contains(*out.value)) {
    out.assertions.result_in_interpretation = false;
    out.assertions.violations.push_back("result " + to_string(*out.value) + " is not in [[" + to_string(call) + "]]");
  }
  return out;
}

/// Set-valued counterpart: every element of every cached set is checked,
/// and every normal form must belong to [[f(args)]].
inline MemoNdOutcome eval_memo_nd(const Program& p, const SetInterpretation& si, const Symbol& f,
                                  std::vector<Term> args, const EvalBudget& budget = {}) {
  Term call = detail::make_call(p, f, args);
  MemoNdOutcome out;
  TermSet top = si.eval(call);
  detail::WitnessSet w(top, args, out.assertions);
  Evaluator ev(p, budget);
  auto r = ev.evaluate_nd(call);
  out.values = r.values;
  out.incomplete = r.incomplete;
  out.stats = r.stats;
  out.cache = ev.snapshot(true);
  for (const auto& e : out.cache) detail::check_entry(w, e, out.assertions);
  for (const Term& v : out.values) {
    if (!top.contains(v)) {
      out.assertions.result_in_interpretation = false;
      out.assertions.violations.push_back("normal form " + to_string(v) + " is not in [[" + to_string(call) + "]]");
    }
  }
  return out;
}

struct BoundProbe {
  std::vector<std::pair<std::size_t, std::size_t>> points;  // (input size, output size)
  double slope = 0;  // least-squares fit of log(output) against log(input)

  std::string to_text() const {
    std::ostringstream os;
    for (auto [x, y] : points) os << "size=" << x << " image=" << y << '\n';
    os << "degree_estimate=" << slope << '\n';
    return os.str();
  }
};

/// Random argument sets with |m| close to n
inline TermSet random_term_set(const Program& p, std::mt19937_64& rng, std::size_t n,
                               std::size_t max_term_size = 12) {
  std::vector<Term> out;
  std::size_t total = 0;
  std::size_t stall = 0;
  while (total < n && stall < 1000) {
    Term t = random_constructor_term(p.constructors(), rng, std::min(max_term_size, n - total));
    if (std::find(out.begin(), out.end(), t) != out.end()) {
      ++stall;
      continue;
    }
    total += t.size();
    out.push_back(std::move(t));
  }
  return TermSet(std::move(out));
}

/// Measures |[[s]](m1..mk)| as the argument sizes grow and fits the
/// log-log slope. Evidence for a polynomial bound, not a proof.
inline BoundProbe probe_poly_bound(const SetInterpretation& si, const Symbol& s, const std::vector<std::size_t>& sizes,
                                   std::uint64_t seed = 0, std::size_t trials = 3) {
  BoundProbe probe;
  std::mt19937_64 rng(seed);
  std::vector<double> xs, ys;
  for (std::size_t n : sizes) {
    std::size_t best_in = 0, best_out = 0;
    for (std::size_t t = 0; t < trials; ++t) {
      std::vector<TermSet> ms;
      std::size_t in = 0;
      for (std::size_t i = 0; i < s.arity; ++i) {
        ms.push_back(random_term_set(si.program(), rng, n));
        in += set_size(ms.back());
      }
      std::size_t out = set_size(si.apply(s, ms));
      if (out >= best_out) {
        best_out = out;
        best_in = in;
      }
    }
    if (s.arity == 0) best_in = n;
    probe.points.emplace_back(best_in, best_out);
    xs.push_back(std::log(static_cast<double>(std::max<std::size_t>(best_in, 1))));
    ys.push_back(std::log(static_cast<double>(std::max<std::size_t>(best_out, 1))));
  }
  if (xs.size() >= 2) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(ys.size());
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    probe.slope = sxx > 0 ? sxy / sxx : 0;
  }
  return probe;
}

}  // namespace icc
