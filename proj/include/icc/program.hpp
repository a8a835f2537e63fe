#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "icc/error.hpp"
#include "icc/term.hpp"

namespace icc {

enum class Mode { confluent, nondeterministic };

inline const char* to_string(Mode m) {
  return m == Mode::confluent ? "confluent" : "nondeterministic";
}

struct Rule {
  Term lhs;
  Term rhs;
  std::size_t line = 0;  // source line, 0 when built programmatically
};

/// Signature, rules and entry point. Symbols get consecutive decl_index
/// values across both kinds, so decl_index can index per-symbol tables.
class Program {
 public:
  Mode mode = Mode::confluent;

  /// Extra precedence facts `first > second` (e.g. from composition).
  std::vector<std::pair<std::string, std::string>> precedence_hints;

  SymbolRef add_constructor(const std::string& name, std::size_t arity) {
    return declare(name, SymbolKind::constructor, arity);
  }
  SymbolRef add_function(const std::string& name, std::size_t arity) {
    return declare(name, SymbolKind::function, arity);
  }

  void set_main(const std::string& name) {
    SymbolRef s = find(name);
    if (!s || !s->is_function()) throw ContractError("main '" + name + "' is not a declared function");
    main_ = s;
  }

  void add_rule(Term lhs, Term rhs, std::size_t line = 0) {
    rules_.push_back(Rule{std::move(lhs), std::move(rhs), line});
  }
  void set_rules(std::vector<Rule> rules) { rules_ = std::move(rules); }

  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const std::vector<SymbolRef>& symbols() const noexcept { return symbols_; }
  const SymbolRef& main() const noexcept { return main_; }

  std::vector<SymbolRef> constructors() const { return of_kind(SymbolKind::constructor); }
  std::vector<SymbolRef> functions() const { return of_kind(SymbolKind::function); }

  SymbolRef find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : symbols_[it->second];
  }

  SymbolRef require(const std::string& name) const {
    SymbolRef s = find(name);
    if (!s) throw ContractError("undeclared symbol '" + name + "'");
    return s;
  }

  /// Convenience builder for terms over this signature.
  Term make(const std::string& name, std::vector<Term> args = {}) const {
    return Term::apply(require(name), std::move(args));
  }

  /// True when the symbol object belongs to this program's signature.
  bool owns(const Symbol& s) const {
    SymbolRef mine = find(s.name);
    return mine && same_symbol(*mine, s) && mine->decl_index == s.decl_index;
  }

 private:
  SymbolRef declare(const std::string& name, SymbolKind kind, std::size_t arity) {
    if (by_name_.count(name)) throw ContractError("symbol '" + name + "' declared twice");
    SymbolRef s = make_symbol(name, kind, arity, symbols_.size());
    by_name_.emplace(name, symbols_.size());
    symbols_.push_back(s);
    return s;
  }

  std::vector<SymbolRef> of_kind(SymbolKind k) const {
    std::vector<SymbolRef> out;
    for (const auto& s : symbols_) {
      if (s->kind == k) out.push_back(s);
    }
    return out;
  }

  std::vector<SymbolRef> symbols_;
  std::unordered_map<std::string, std::size_t> by_name_;
  std::vector<Rule> rules_;
  SymbolRef main_;
};

}  // namespace icc
