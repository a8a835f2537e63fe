#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "icc/error.hpp"
#include "icc/parser.hpp"
#include "icc/program.hpp"
#include "icc/term.hpp"

namespace icc {

/// Quasi-precedence on function names, kept as the reflexive-transitive
/// closure of the asserted facts plus the list of facts asserted strict.
class Precedence {
 public:
  std::size_t index_of(const std::string& name) {
    auto it = ids_.find(name);
    if (it != ids_.end()) return it->second;
    std::size_t n = names_.size();
    ids_.emplace(name, n);
    names_.push_back(name);
    for (auto& row : ge_) row.push_back(false);
    ge_.emplace_back(n + 1, false);
    ge_[n][n] = true;
    return n;
  }

  bool contains(const std::string& name) const { return ids_.count(name) != 0; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  /// Asserts a > b. Returns false, leaving *this unchanged, if that
  /// contradicts what is already known.
  bool add_greater(const std::string& a, const std::string& b) {
    if (a == b) return false;
    Precedence next = *this;
    std::size_t x = next.index_of(a), y = next.index_of(b);
    if (next.ge_[y][x]) return false;
    next.close(x, y);
    next.strict_.emplace_back(x, y);
    if (!next.consistent()) return false;
    *this = std::move(next);
    return true;
  }

  /// Asserts a ≈ b, with the same all-or-nothing behaviour.
  bool add_equal(const std::string& a, const std::string& b) {
    if (a == b) return true;
    Precedence next = *this;
    std::size_t x = next.index_of(a), y = next.index_of(b);
    next.close(x, y);
    next.close(y, x);
    if (!next.consistent()) return false;
    *this = std::move(next);
    return true;
  }

  bool geq(const std::string& a, const std::string& b) const {
    if (a == b) return true;
    auto ia = ids_.find(a), ib = ids_.find(b);
    if (ia == ids_.end() || ib == ids_.end()) return false;
    return ge_[ia->second][ib->second];
  }
  /// Strict part: a > b.
  bool greater(const std::string& a, const std::string& b) const { return geq(a, b) && !geq(b, a); }
  bool equivalent(const std::string& a, const std::string& b) const { return geq(a, b) && geq(b, a); }

  /// Lines `a = b` for equivalences and `a > b` for the covering pairs of
  /// the strict part, in first-mention order.
  std::string to_text() const {
    std::string out;
    std::size_t n = names_.size();
    std::vector<std::size_t> rep(n);
    for (std::size_t i = 0; i < n; ++i) {
      rep[i] = i;
      for (std::size_t j = 0; j < i; ++j) {
        if (ge_[i][j] && ge_[j][i]) {
          rep[i] = rep[j];
          break;
        }
      }
      if (rep[i] != i) out += names_[rep[i]] + " = " + names_[i] + "\n";
    }
    auto gt = [&](std::size_t a, std::size_t b) { return ge_[a][b] && !ge_[b][a]; };
    for (std::size_t a = 0; a < n; ++a) {
      if (rep[a] != a) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (rep[b] != b || !gt(a, b)) continue;
        bool covered = false;
        for (std::size_t c = 0; c < n && !covered; ++c) {
          covered = rep[c] == c && gt(a, c) && gt(c, b);
        }
        if (!covered) out += names_[a] + " > " + names_[b] + "\n";
      }
    }
    return out;
  }

  /// Accepts lines `a > b`, `a = b` and chains such as `a > b = c > d`.
  static Precedence parse(std::string_view text) {
    Precedence p;
    auto lines = detail::split_lines(text);
    for (std::size_t ln = 0; ln < lines.size(); ++ln) {
      std::string line = lines[ln];
      if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
      std::vector<std::pair<std::string, std::size_t>> toks;
      for (std::size_t i = 0; i < line.size();) {
        char c = line[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
          ++i;
        } else if (c == '>' || c == '=') {
          toks.emplace_back(std::string(1, c), i + 1);
          ++i;
        } else if (is_ident_char(c)) {
          std::size_t j = i;
          while (j < line.size() && is_ident_char(line[j])) ++j;
          toks.emplace_back(line.substr(i, j - i), i + 1);
          i = j;
        } else {
          throw ParseError(ln + 1, i + 1, std::string("unexpected character '") + c + "'");
        }
      }
      if (toks.empty()) continue;
      if (toks.size() < 3 || toks.size() % 2 == 0) {
        throw ParseError(ln + 1, toks.front().second, "expected `a > b` or `a = b`");
      }
      for (std::size_t i = 0; i < toks.size(); i += 2) {
        const auto& t = toks[i];
        if (t.first == ">" || t.first == "=") throw ParseError(ln + 1, t.second, "expected a symbol name");
        if (i + 1 < toks.size()) {
          const auto& op = toks[i + 1];
          if (op.first != ">" && op.first != "=") {
            throw ParseError(ln + 1, op.second, "expected '>' or '='");
          }
          const std::string& b = toks[i + 2].first;
          bool ok = op.first == ">" ? p.add_greater(t.first, b) : p.add_equal(t.first, b);
          if (!ok) {
            throw ParseError(ln + 1, op.second,
                             "'" + t.first + " " + op.first + " " + b + "' contradicts earlier lines");
          }
        }
      }
    }
    return p;
  }

  /// Problems with respect to a program: unknown or non-function names,
  /// equivalent symbols of different arity.
  std::vector<std::string> validate(const Program& prog) const {
    std::vector<std::string> out;
    for (const auto& n : names_) {
      SymbolRef s = prog.find(n);
      if (!s) {
        out.push_back("unknown symbol '" + n + "'");
      } else if (!s->is_function()) {
        out.push_back("'" + n + "' is a constructor");
      }
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
      for (std::size_t j = i + 1; j < names_.size(); ++j) {
        if (!equivalent(names_[i], names_[j])) continue;
        SymbolRef a = prog.find(names_[i]), b = prog.find(names_[j]);
        if (a && b && a->arity != b->arity) {
          out.push_back("'" + names_[i] + "' and '" + names_[j] + "' are equivalent but differ in arity");
        }
      }
    }
    return out;
  }

 private:
  void close(std::size_t x, std::size_t y) {
    std::size_t n = names_.size();
    for (std::size_t a = 0; a < n; ++a) {
      if (!ge_[a][x]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (ge_[y][b]) ge_[a][b] = true;
      }
    }
  }
  bool consistent() const {
    for (auto [x, y] : strict_) {
      if (ge_[y][x]) return false;
    }
    return true;
  }

  std::unordered_map<std::string, std::size_t> ids_;
  std::vector<std::string> names_;
  std::vector<std::vector<bool>> ge_;
  std::vector<std::pair<std::size_t, std::size_t>> strict_;
};

inline Precedence load_precedence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return Precedence::parse(ss.str());
}

/// Product extension: componentwise base-or-equal with one strict position.
inline bool product_lt(std::span<const Term> ss, std::span<const Term> ts,
                       const std::function<bool(const Term&, const Term&)>& base) {
  if (ss.size() != ts.size()) {
    throw ContractError("product_lt: sequences of length " + std::to_string(ss.size()) + " and " +
                        std::to_string(ts.size()));
  }
  bool strict = false;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    if (ss[i] == ts[i]) continue;
    if (!base(ss[i], ts[i])) return false;
    strict = true;
  }
  return strict;
}

enum class PpoRule { subterm_equal, subterm, constructor_left, precedence, equivalent };

inline const char* to_string(PpoRule r) {
  switch (r) {
    case PpoRule::subterm_equal: return "subterm(=)";
    case PpoRule::subterm: return "subterm";
    case PpoRule::constructor_left: return "constructor";
    case PpoRule::precedence: return "precedence";
    case PpoRule::equivalent: return "equivalent";
  }
  return "?";
}

/// Derivation of s < t. `position` is the argument of t used by the
/// subterm rules (0-based). For the equivalent-heads rule the first
/// premises justify each s_i < t, followed by one premise per argument
/// position where s_i differs from t_i.
struct PpoWitness {
  PpoRule rule;
  Term lower;
  Term upper;
  std::size_t position = 0;
  std::vector<PpoWitness> premises;

  std::string to_text(std::size_t indent = 0) const {
    std::string out(indent * 2, ' ');
    out += to_string(lower) + " < " + to_string(upper) + "  [" + icc::to_string(rule);
    if (rule == PpoRule::subterm || rule == PpoRule::subterm_equal) {
      out += " " + std::to_string(position + 1);
    }
    out += "]\n";
    for (const auto& p : premises) out += p.to_text(indent + 1);
    return out;
  }
};

namespace detail {

struct PairHash {
  std::size_t operator()(const std::pair<Term, Term>& p) const noexcept {
    return p.first.hash() * 31 + p.second.hash();
  }
};

class PpoProver {
 public:
  explicit PpoProver(const Precedence& prec) : prec_(prec) {}

  bool lt(const Term& s, const Term& t) {
    if (t.is_variable()) return false;
    auto key = std::make_pair(s, t);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool r = decide(s, t);
    memo_.emplace(std::move(key), r);
    return r;
  }

  std::optional<PpoWitness> prove(const Term& s, const Term& t) {
    if (!lt(s, t)) return std::nullopt;
    return build(s, t);
  }

 private:
  bool all_below(const Term& s, const Term& t) {
    for (const Term& a : s.args()) {
      if (!lt(a, t)) return false;
    }
    return true;
  }

  bool product(const Term& s, const Term& t) {
    return product_lt(s.args(), t.args(), [this](const Term& a, const Term& b) { return lt(a, b); });
  }

  bool decide(const Term& s, const Term& t) {
    for (const Term& ti : t.args()) {
      if (s == ti || lt(s, ti)) return true;
    }
    if (s.is_variable() || !t.is_function_rooted()) return false;
    const Symbol& f = t.symbol();
    const Symbol& g = s.symbol();
    if (g.is_constructor()) return all_below(s, t);
    if (prec_.greater(f.name, g.name)) return all_below(s, t);
    if (g.arity == f.arity && (same_symbol(f, g) || prec_.equivalent(f.name, g.name))) {
      return product(s, t) && all_below(s, t);
    }
    return false;
  }

  PpoWitness build(const Term& s, const Term& t) {
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (s == t.args()[i]) return {PpoRule::subterm_equal, s, t, i, {}};
    }
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (lt(s, t.args()[i])) return {PpoRule::subterm, s, t, i, {build(s, t.args()[i])}};
    }
    const Symbol& f = t.symbol();
    const Symbol& g = s.symbol();
    PpoWitness w{PpoRule::constructor_left, s, t, 0, {}};
    if (g.is_function()) {
      w.rule = prec_.greater(f.name, g.name) ? PpoRule::precedence : PpoRule::equivalent;
    }
    for (const Term& a : s.args()) w.premises.push_back(build(a, t));
    if (w.rule == PpoRule::equivalent) {
      for (std::size_t i = 0; i < s.arity(); ++i) {
        if (!(s.args()[i] == t.args()[i])) w.premises.push_back(build(s.args()[i], t.args()[i]));
      }
    }
    return w;
  }

  const Precedence& prec_;
  std::unordered_map<std::pair<Term, Term>, bool, PairHash> memo_;
};

}  // namespace detail

/// s <ppo t under `prec`, with a derivation when it holds.
inline std::pair<bool, std::optional<PpoWitness>> ppo_lt(const Term& s, const Term& t,
                                                          const Precedence& prec) {
  detail::PpoProver prover(prec);
  auto w = prover.prove(s, t);
  bool ok = w.has_value();
  return {ok, std::move(w)};
}

/// Checks a derivation step by step against the four inference rules only.
inline bool replay_witness(const PpoWitness& w, const Precedence& prec) {
  const Term& s = w.lower;
  const Term& t = w.upper;
  if (t.is_variable()) return false;
  auto premise_ok = [&](const PpoWitness& p, const Term& lo, const Term& hi) {
    return p.lower == lo && p.upper == hi && replay_witness(p, prec);
  };
  switch (w.rule) {
    case PpoRule::subterm_equal:
      return w.position < t.arity() && t.args()[w.position] == s && w.premises.empty();
    case PpoRule::subterm:
      return w.position < t.arity() && w.premises.size() == 1 &&
             premise_ok(w.premises[0], s, t.args()[w.position]);
    case PpoRule::constructor_left:
    case PpoRule::precedence:
    case PpoRule::equivalent: {
      if (s.is_variable() || !t.is_function_rooted()) return false;
      const Symbol& g = s.symbol();
      const Symbol& f = t.symbol();
      if (w.rule == PpoRule::constructor_left && !g.is_constructor()) return false;
      if (w.rule == PpoRule::precedence && (!g.is_function() || !prec.greater(f.name, g.name))) {
        return false;
      }
      std::size_t extra = 0;
      if (w.rule == PpoRule::equivalent) {
        if (!g.is_function() || g.arity != f.arity) return false;
        if (!same_symbol(f, g) && !prec.equivalent(f.name, g.name)) return false;
        for (std::size_t i = 0; i < s.arity(); ++i) {
          if (!(s.args()[i] == t.args()[i])) ++extra;
        }
        if (extra == 0) return false;
      }
      if (w.premises.size() != s.arity() + extra) return false;
      for (std::size_t i = 0; i < s.arity(); ++i) {
        if (!premise_ok(w.premises[i], s.args()[i], t)) return false;
      }
      std::size_t k = s.arity();
      for (std::size_t i = 0; i < s.arity() && w.rule == PpoRule::equivalent; ++i) {
        if (s.args()[i] == t.args()[i]) continue;
        if (!premise_ok(w.premises[k++], s.args()[i], t.args()[i])) return false;
      }
      return true;
    }
  }
  return false;
}

struct PpoRuleVerdict {
  std::size_t rule;
  bool oriented = false;
  std::optional<PpoWitness> witness;
};

struct PpoReport {
  bool ok = true;
  std::vector<PpoRuleVerdict> rules;
};

/// rhs <ppo lhs for every rule.
inline PpoReport check_ppo(const Program& p, const Precedence& prec) {
  PpoReport rep;
  detail::PpoProver prover(prec);
  for (std::size_t i = 0; i < p.rules().size(); ++i) {
    const Rule& r = p.rules()[i];
    auto w = prover.prove(r.rhs, r.lhs);
    rep.ok = rep.ok && w.has_value();
    rep.rules.push_back({i, w.has_value(), std::move(w)});
  }
  return rep;
}

enum class SynthesisStatus { found, none, budget_exhausted };

inline const char* to_string(SynthesisStatus s) {
  switch (s) {
    case SynthesisStatus::found: return "found";
    case SynthesisStatus::none: return "none";
    case SynthesisStatus::budget_exhausted: return "budget_exhausted";
  }
  return "?";
}

struct SynthesisResult {
  SynthesisStatus status = SynthesisStatus::none;
  std::optional<Precedence> precedence;
  std::size_t nodes = 0;
};

namespace detail {

/// Depth-first search over derivations; each alternative may add a
/// precedence constraint, undone on backtracking by copying the store.
class PrecedenceSearch {
 public:
  PrecedenceSearch(const Program& p, std::size_t budget) : prog_(p), budget_(budget) {}

  SynthesisResult run() {
    std::vector<std::size_t> order(prog_.rules().size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return prog_.rules()[a].rhs.size() < prog_.rules()[b].rhs.size();
    });
    Goals goals;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      goals.push_back(Goal{prog_.rules()[*it].rhs, prog_.rules()[*it].lhs});
    }
    Precedence store;
    for (const auto& f : prog_.functions()) store.index_of(f->name);
    for (const auto& [a, b] : prog_.precedence_hints) {
      if (!store.add_greater(a, b)) return {SynthesisStatus::none, std::nullopt, 0};
    }
    SynthesisResult res;
    bool found = false;
    try {
      found = solve(goals, store, res);
    } catch (const Exhausted&) {
      res.status = SynthesisStatus::budget_exhausted;
      res.nodes = nodes_;
      return res;
    }
    res.nodes = nodes_;
    res.status = found ? SynthesisStatus::found : SynthesisStatus::none;
    return res;
  }

 private:
  struct Goal {
    Term lower;
    Term upper;
  };
  using Goals = std::vector<Goal>;  // processed from the back
  struct Exhausted {};

  bool solve(Goals goals, const Precedence& store, SynthesisResult& res) {
    if (++nodes_ > budget_) throw Exhausted{};
    if (goals.empty()) {
      res.precedence = store;
      return true;
    }
    Goal g = goals.back();
    goals.pop_back();
    const Term& s = g.lower;
    const Term& t = g.upper;
    if (t.is_variable()) return false;
    {
      // already provable under the current store: no choice needed
      PpoProver quick(store);
      if (quick.lt(s, t)) return solve(goals, store, res);
    }
    for (const Term& ti : t.args()) {
      if (s == ti) return solve(goals, store, res);
    }
    for (const Term& ti : t.args()) {
      if (ti.is_variable() || ti.size() < s.size()) continue;
      Goals next = goals;
      next.push_back({s, ti});
      if (solve(std::move(next), store, res)) return true;
    }
    if (s.is_variable() || !t.is_function_rooted()) return false;
    const Symbol& f = t.symbol();
    const Symbol& gs = s.symbol();
    auto with_args = [&](Goals next) {
      for (const Term& a : s.args()) next.push_back({a, t});
      return next;
    };
    if (gs.is_constructor()) return solve(with_args(goals), store, res);
    if (!same_symbol(f, gs)) {
      Precedence st = store;
      if (st.add_greater(f.name, gs.name) && solve(with_args(goals), st, res)) return true;
    }
    if (gs.arity == f.arity) {
      Precedence st = store;
      if (st.add_equal(f.name, gs.name)) {
        Goals next = with_args(goals);
        bool strict = false;
        for (std::size_t i = 0; i < s.arity(); ++i) {
          if (s.args()[i] == t.args()[i]) continue;
          next.push_back({s.args()[i], t.args()[i]});
          strict = true;
        }
        if (strict && solve(std::move(next), st, res)) return true;
      }
    }
    return false;
  }

  const Program& prog_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
};

}  // namespace detail

/// Searches for a precedence orienting every rule. `none` means the search
/// space was exhausted; `budget_exhausted` means it was cut short.
inline SynthesisResult synthesize_precedence(const Program& p, std::size_t node_budget = 1'000'000) {
  detail::PrecedenceSearch search(p, node_budget);
  SynthesisResult r = search.run();
  if (r.status == SynthesisStatus::found && !check_ppo(p, *r.precedence).ok) {
    throw Error("internal: synthesized precedence does not orient the rules");
  }
  return r;
}

}  // namespace icc
