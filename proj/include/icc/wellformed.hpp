#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "icc/program.hpp"
#include "icc/term.hpp"

namespace icc {

struct Diagnostic {
  std::optional<std::size_t> rule;  // index into Program::rules(), none for signature issues
  std::size_t line = 0;
  std::string message;
};

namespace detail {
inline void check_symbols(const Program& p, const Term& t, std::size_t ri, std::size_t line,
                          std::vector<Diagnostic>& out) {
  if (t.is_variable()) return;
  if (!p.owns(t.symbol())) {
    out.push_back({ri, line, "symbol '" + t.name() + "' is not declared in the program"});
  }
  for (const Term& a : t.args()) check_symbols(p, a, ri, line, out);
}
}  // namespace detail

/// Rule-shape conditions: lhs = f(p1..pn) with f a function and each pi a
/// constructor pattern, rhs variables bound by the lhs, declared symbols,
/// and a function symbol as main.
inline std::vector<Diagnostic> check_wellformed(const Program& p) {
  std::vector<Diagnostic> out;
  if (!p.main()) {
    out.push_back({std::nullopt, 0, "no main function declared"});
  } else if (!p.main()->is_function()) {
    out.push_back({std::nullopt, 0, "main '" + p.main()->name + "' is not a function"});
  }
  for (std::size_t i = 0; i < p.rules().size(); ++i) {
    const Rule& r = p.rules()[i];
    detail::check_symbols(p, r.lhs, i, r.line, out);
    detail::check_symbols(p, r.rhs, i, r.line, out);
    if (!r.lhs.is_function_rooted()) {
      out.push_back({i, r.line, "left-hand side must be rooted by a function symbol"});
    } else {
      for (const Term& a : r.lhs.args()) {
        if (a.has_function_symbol()) {
          out.push_back({i, r.line, "function symbol below the root of the left-hand side"});
          break;
        }
      }
    }
    auto lv = variables(r.lhs);
    for (const std::string& v : variables(r.rhs)) {
      if (std::find(lv.begin(), lv.end(), v) == lv.end()) {
        out.push_back({i, r.line, "variable " + v + " not in lhs"});
      }
    }
  }
  return out;
}

struct ConsFreeViolation {
  std::size_t rule;
  Position position;  // inside the rhs
  Term subterm;
};

struct ConsFreeReport {
  bool cons_free = true;
  std::vector<ConsFreeViolation> violations;
};

/// Every rhs subterm that is a constructor term must occur in the lhs;
/// every other rhs subterm must not be constructor-rooted.
inline ConsFreeReport is_cons_free(const Program& p) {
  ConsFreeReport rep;
  for (std::size_t i = 0; i < p.rules().size(); ++i) {
    const Rule& r = p.rules()[i];
    for_each_subterm(r.rhs, [&](const Term& u, const Position& pos) {
      bool ok = u.is_constructor_term() ? is_subterm(u, r.lhs) : !u.is_constructor_rooted();
      if (!ok) rep.violations.push_back({i, pos, u});
    });
  }
  rep.cons_free = rep.violations.empty();
  return rep;
}

}  // namespace icc
