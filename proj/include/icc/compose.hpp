#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "icc/error.hpp"
#include "icc/program.hpp"
#include "icc/term.hpp"

namespace icc {

namespace detail {
inline Term transport(const Term& t, const Program& target,
                      const std::unordered_map<std::string, std::string>& rename) {
  if (t.is_variable()) return t;
  auto it = rename.find(t.name());
  const std::string& name = it == rename.end() ? t.name() : it->second;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(transport(a, target, rename));
  return Term::apply(target.require(name), std::move(args));
}
}  // namespace detail

/// Builds h(x1..xn) -> f(g1(x1..xn), ..., gk(x1..xn)) over the union of the
/// components. Functions of component i (f is 0) are renamed to "i.name";
/// constructors are shared and must agree on arity. The new main is `h`
/// (primed until fresh), with precedence hints h > main(f), h > main(gi).
inline Program compose_programs(const Program& f, const std::vector<Program>& gs) {
  if (!f.main()) throw ContractError("compose: outer program has no main");
  if (gs.size() != f.main()->arity) {
    throw ContractError("compose: outer main '" + f.main()->name + "' has arity " +
                        std::to_string(f.main()->arity) + " but " + std::to_string(gs.size()) +
                        " inner program(s) were given");
  }
  std::size_t n = 0;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (!gs[i].main()) throw ContractError("compose: inner program has no main");
    if (i == 0) n = gs[i].main()->arity;
    if (gs[i].main()->arity != n) {
      throw ContractError("compose: inner mains disagree on arity (" + std::to_string(n) + " vs " +
                          std::to_string(gs[i].main()->arity) + ")");
    }
  }

  std::vector<const Program*> parts{&f};
  for (const auto& g : gs) parts.push_back(&g);

  Program out;
  out.mode = Mode::confluent;
  for (const Program* part : parts) {
    if (part->mode == Mode::nondeterministic) out.mode = Mode::nondeterministic;
    for (const auto& c : part->constructors()) {
      SymbolRef have = out.find(c->name);
      if (!have) {
        out.add_constructor(c->name, c->arity);
      } else if (have->arity != c->arity) {
        throw ContractError("compose: constructor '" + c->name + "' has arity " +
                            std::to_string(have->arity) + " and " + std::to_string(c->arity));
      }
    }
  }

  std::string h = "h";
  auto taken = [&](const std::string& name) {
    if (out.find(name)) return true;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (const auto& fn : parts[i]->functions()) {
        if (std::to_string(i) + "." + fn->name == name) return true;
      }
    }
    return false;
  };
  while (taken(h)) h += '\'';
  out.add_function(h, n);

  std::vector<std::unordered_map<std::string, std::string>> renames(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const auto& fn : parts[i]->functions()) {
      std::string name = std::to_string(i) + "." + fn->name;
      renames[i].emplace(fn->name, name);
      out.add_function(name, fn->arity);
    }
  }
  out.set_main(h);

  std::vector<Term> xs;
  for (std::size_t j = 0; j < n; ++j) {
    std::string v = "x" + std::to_string(j + 1);
    while (out.find(v)) v += '\'';
    xs.push_back(Term::variable(v));
  }
  std::vector<Term> inner;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    inner.push_back(out.make(renames[i].at(parts[i]->main()->name), xs));
  }
  out.add_rule(out.make(h, xs), out.make(renames[0].at(f.main()->name), inner));

  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (const Rule& r : parts[i]->rules()) {
      out.add_rule(detail::transport(r.lhs, out, renames[i]),
                   detail::transport(r.rhs, out, renames[i]));
    }
    for (const auto& [a, b] : parts[i]->precedence_hints) {
      out.precedence_hints.emplace_back(renames[i].at(a), renames[i].at(b));
    }
    out.precedence_hints.emplace_back(h, renames[i].at(parts[i]->main()->name));
  }
  return out;
}

}  // namespace icc
