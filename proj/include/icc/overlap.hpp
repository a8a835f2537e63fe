#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "icc/program.hpp"
#include "icc/term.hpp"

namespace icc {

namespace detail {

inline Term resolve(const Term& t, const Substitution& s) {
  Term cur = t;
  while (cur.is_variable()) {
    auto it = s.find(cur.name());
    if (it == s.end()) break;
    cur = it->second;
  }
  return cur;
}

inline bool occurs(const std::string& v, const Term& t, const Substitution& s) {
  Term r = resolve(t, s);
  if (r.is_variable()) return r.name() == v;
  for (const Term& a : r.args()) {
    if (occurs(v, a, s)) return true;
  }
  return false;
}

inline bool unify_into(const Term& a, const Term& b, Substitution& s) {
  Term x = resolve(a, s);
  Term y = resolve(b, s);
  if (x.is_variable() && y.is_variable() && x.name() == y.name()) return true;
  if (x.is_variable()) {
    if (occurs(x.name(), y, s)) return false;
    s.emplace(x.name(), y);
    return true;
  }
  if (y.is_variable()) return unify_into(y, x, s);
  if (!same_symbol(x.symbol(), y.symbol())) return false;
  for (std::size_t i = 0; i < x.arity(); ++i) {
    if (!unify_into(x.args()[i], y.args()[i], s)) return false;
  }
  return true;
}

inline Term rename_vars(const Term& t, const std::string& suffix) {
  if (t.is_variable()) return Term::variable(t.name() + suffix);
  if (t.is_ground()) return t;
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(rename_vars(a, suffix));
  return Term::apply(t.symbol_ref(), std::move(args));
}

}  // namespace detail

/// Syntactic unification with occurs check. The result is triangular:
/// bindings may refer to other bound variables.
inline std::optional<Substitution> unify(const Term& a, const Term& b) {
  Substitution s;
  if (!detail::unify_into(a, b, s)) return std::nullopt;
  return s;
}

inline bool is_left_linear(const Rule& r) {
  std::vector<std::string> seen;
  bool linear = true;
  for_each_subterm(r.lhs, [&](const Term& u, const Position&) {
    if (!u.is_variable()) return;
    for (const auto& v : seen) {
      if (v == u.name()) linear = false;
    }
    seen.push_back(u.name());
  });
  return linear;
}

struct OverlapPair {
  std::size_t first;
  std::size_t second;
  Position position;  // always the root: patterns contain no function symbols
};

struct OverlapReport {
  std::vector<OverlapPair> pairs;
  std::vector<std::size_t> nonlinear_rules;

  bool orthogonal() const { return pairs.empty() && nonlinear_rules.empty(); }
};

/// Pairs of rules whose left-hand sides unify once variables are renamed
/// apart. Only root overlaps exist for constructor-pattern left-hand sides.
inline OverlapReport detect_overlaps(const Program& p) {
  OverlapReport rep;
  const auto& rules = p.rules();
  std::vector<Term> renamed;
  renamed.reserve(rules.size());
  for (std::size_t i = 0; i < rules.size(); ++i) {
    renamed.push_back(detail::rename_vars(rules[i].lhs, "#" + std::to_string(i)));
    if (!is_left_linear(rules[i])) rep.nonlinear_rules.push_back(i);
  }
  for (std::size_t i = 0; i < rules.size(); ++i) {
    for (std::size_t j = i + 1; j < rules.size(); ++j) {
      if (unify(renamed[i], renamed[j])) rep.pairs.push_back({i, j, {}});
    }
  }
  return rep;
}

}  // namespace icc
