#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "icc/error.hpp"

namespace icc {

enum class SymbolKind { constructor, function };

/// A declared symbol. Names are unique within a program; `decl_index` is the
/// position in declaration order and doubles as the rank used by term_lt.
struct Symbol {
  std::string name;
  SymbolKind kind = SymbolKind::constructor;
  std::size_t arity = 0;
  std::size_t decl_index = 0;
  std::size_t name_hash = 0;

  bool is_constructor() const noexcept { return kind == SymbolKind::constructor; }
  bool is_function() const noexcept { return kind == SymbolKind::function; }
};

using SymbolRef = std::shared_ptr<const Symbol>;

// Symbols must be created here so that name_hash agrees with same_symbol().
inline SymbolRef make_symbol(std::string name, SymbolKind kind, std::size_t arity,
                             std::size_t decl_index = 0) {
  auto h = std::hash<std::string>{}(name);
  return std::make_shared<const Symbol>(Symbol{std::move(name), kind, arity, decl_index, h});
}

inline bool same_symbol(const Symbol& a, const Symbol& b) noexcept {
  return &a == &b || (a.arity == b.arity && a.kind == b.kind && a.name == b.name);
}

/// Immutable first-order term: a variable or a symbol applied to exactly
/// `arity` arguments. Nodes are shared; sharing is never observable.
class Term {
 public:
  static Term variable(std::string name) {
    auto n = std::make_shared<Node>();
    n->hash = std::hash<std::string>{}(name) * 0x9E3779B97F4A7C15ULL + 0x51ED27;
    n->var = std::move(name);
    n->ground = false;
    return Term(std::move(n));
  }

  static Term apply(SymbolRef symbol, std::vector<Term> args) {
    if (!symbol) throw ContractError("Term::apply: null symbol");
    if (args.size() != symbol->arity) {
      throw ContractError("arity mismatch for '" + symbol->name + "': expected " +
                          std::to_string(symbol->arity) + " argument(s), got " +
                          std::to_string(args.size()));
    }
    auto n = std::make_shared<Node>();
    std::size_t h = symbol->name_hash ^ (symbol->arity * 0x100000001B3ULL);
    n->has_function = symbol->is_function();
    for (const Term& a : args) {
      n->size += a.node_->size;
      n->ground = n->ground && a.node_->ground;
      n->has_function = n->has_function || a.node_->has_function;
      h = (h ^ a.node_->hash) * 0x100000001B3ULL + 0x9E3779B9;
    }
    n->hash = h;
    n->symbol = std::move(symbol);
    n->args = std::move(args);
    return Term(std::move(n));
  }

  static Term constant(SymbolRef symbol) { return apply(std::move(symbol), {}); }

  bool is_variable() const noexcept { return node_->symbol == nullptr; }

  /// Variable name, or the root symbol's name.
  const std::string& name() const noexcept {
    return node_->symbol ? node_->symbol->name : node_->var;
  }

  const Symbol& symbol() const {
    if (!node_->symbol) throw ContractError("variable '" + node_->var + "' has no symbol");
    return *node_->symbol;
  }
  const SymbolRef& symbol_ref() const noexcept { return node_->symbol; }

  std::span<const Term> args() const noexcept { return node_->args; }
  const Term& arg(std::size_t i) const { return node_->args.at(i); }
  std::size_t arity() const noexcept { return node_->args.size(); }

  /// Number of symbol and variable occurrences.
  std::size_t size() const noexcept { return node_->size; }
  std::size_t hash() const noexcept { return node_->hash; }

  bool is_ground() const noexcept { return node_->ground; }
  bool has_function_symbol() const noexcept { return node_->has_function; }
  bool is_constructor_term() const noexcept { return !node_->has_function; }
  bool is_ground_constructor() const noexcept { return node_->ground && !node_->has_function; }
  bool is_constructor_rooted() const noexcept {
    return node_->symbol && node_->symbol->is_constructor();
  }
  bool is_function_rooted() const noexcept {
    return node_->symbol && node_->symbol->is_function();
  }

  friend bool operator==(const Term& a, const Term& b) noexcept {
    if (a.node_ == b.node_) return true;
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.hash != y.hash || x.size != y.size) return false;
    if (!x.symbol || !y.symbol) return !x.symbol && !y.symbol && x.var == y.var;
    if (!same_symbol(*x.symbol, *y.symbol)) return false;
    for (std::size_t i = 0; i < x.args.size(); ++i) {
      if (!(x.args[i] == y.args[i])) return false;
    }
    return true;
  }

 private:
  struct Node {
    SymbolRef symbol;  // null for variables
    std::string var;
    std::vector<Term> args;
    std::size_t size = 1;
    std::size_t hash = 0;
    bool ground = true;
    bool has_function = false;
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

using TermHashSet = std::unordered_set<Term, TermHash>;

/// Deterministic total order on arbitrary terms (size, then names, then
/// arguments). Used for canonical set layouts, not for the value order.
struct StructuralLess {
  bool operator()(const Term& a, const Term& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    if (a.is_variable() != b.is_variable()) return a.is_variable();
    if (a.name() != b.name()) return a.name() < b.name();
    if (a.arity() != b.arity()) return a.arity() < b.arity();
    for (std::size_t i = 0; i < a.arity(); ++i) {
      if (a.args()[i] == b.args()[i]) continue;
      return (*this)(a.args()[i], b.args()[i]);
    }
    return false;
  }
};

/// Occurrence path; 1-based argument indices, empty for the root.
using Position = std::vector<std::size_t>;

inline std::string to_string(const Position& p) {
  if (p.empty()) return "root";
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(p[i]);
  }
  return s;
}

inline void print_term(std::ostream& os, const Term& t) {
  os << t.name();
  if (t.is_variable() || t.arity() == 0) return;
  os << '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) os << ',';
    print_term(os, t.args()[i]);
  }
  os << ')';
}

inline std::string to_string(const Term& t) {
  std::string s;
  struct Rec {
    std::string& out;
    void operator()(const Term& u) {
      out += u.name();
      if (u.is_variable() || u.arity() == 0) return;
      out += '(';
      for (std::size_t i = 0; i < u.arity(); ++i) {
        if (i) out += ',';
        (*this)(u.args()[i]);
      }
      out += ')';
    }
  } rec{s};
  rec(t);
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Term& t) {
  print_term(os, t);
  return os;
}

inline std::size_t size(const Term& t) noexcept { return t.size(); }

/// u ⊴ t (reflexive).
inline bool is_subterm(const Term& u, const Term& t) {
  if (u.size() > t.size()) return false;
  if (u.size() == t.size()) return u == t;
  for (const Term& a : t.args()) {
    if (is_subterm(u, a)) return true;
  }
  return false;
}

/// Visits every occurrence in preorder.
template <class F>
void for_each_subterm(const Term& t, F&& visit) {
  Position pos;
  std::function<void(const Term&)> rec = [&](const Term& u) {
    visit(u, static_cast<const Position&>(pos));
    for (std::size_t i = 0; i < u.arity(); ++i) {
      pos.push_back(i + 1);
      rec(u.args()[i]);
      pos.pop_back();
    }
  };
  rec(t);
}

/// Adds every subterm of `t` to `out`.
inline void collect_subterms(const Term& t, TermHashSet& out) {
  if (!out.insert(t).second) return;
  for (const Term& a : t.args()) collect_subterms(a, out);
}

/// Variables in first-occurrence (preorder) order, without repetition.
inline std::vector<std::string> variables(const Term& t) {
  std::vector<std::string> out;
  for_each_subterm(t, [&](const Term& u, const Position&) {
    if (u.is_variable() && std::find(out.begin(), out.end(), u.name()) == out.end()) {
      out.push_back(u.name());
    }
  });
  return out;
}

inline Term subterm_at(const Term& t, const Position& p) {
  Term cur = t;
  for (std::size_t i : p) cur = cur.arg(i - 1);
  return cur;
}

/// Variable bindings produced by matching; values are ground terms.
using Substitution = std::map<std::string, Term>;

namespace detail {
inline bool match_into(const Term& pattern, const Term& subject, Substitution& s) {
  if (pattern.is_variable()) {
    auto [it, inserted] = s.emplace(pattern.name(), subject);
    return inserted || it->second == subject;
  }
  if (subject.is_variable()) return false;
  if (!same_symbol(pattern.symbol(), subject.symbol())) return false;
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match_into(pattern.args()[i], subject.args()[i], s)) return false;
  }
  return true;
}
}  // namespace detail

/// First-order matching; non-linear patterns require equal bindings.
inline std::optional<Substitution> match(const Term& pattern, const Term& subject) {
  Substitution s;
  if (!detail::match_into(pattern, subject, s)) return std::nullopt;
  return s;
}

inline Term substitute(const Term& t, const Substitution& s) {
  if (t.is_variable()) {
    auto it = s.find(t.name());
    if (it == s.end()) throw ContractError("unbound variable '" + t.name() + "'");
    return it->second;
  }
  if (t.is_ground()) return t;
  std::vector<Term> args;
  args.reserve(t.arity());
  for (const Term& a : t.args()) args.push_back(substitute(a, s));
  return Term::apply(t.symbol_ref(), std::move(args));
}

/// The linear order on constructor symbols used to compare values. By
/// default symbols rank by declaration order; `ranks` overrides by name.
struct TermOrder {
  std::unordered_map<std::string, std::size_t> ranks;

  std::size_t rank(const Symbol& s) const {
    if (auto it = ranks.find(s.name); it != ranks.end()) return it->second;
    return s.decl_index;
  }
};

/// Strict lexicographic extension: root symbols first, then arguments left
/// to right. Equal roots imply equal arity, so no length tie-break.
inline bool term_lt(const Term& a, const Term& b, const TermOrder& ord = {}) {
  if (a == b) return false;
  if (a.is_variable() || b.is_variable()) {
    if (a.is_variable() != b.is_variable()) return a.is_variable();
    return a.name() < b.name();
  }
  if (!same_symbol(a.symbol(), b.symbol())) {
    std::size_t ra = ord.rank(a.symbol());
    std::size_t rb = ord.rank(b.symbol());
    if (ra != rb) return ra < rb;
    return a.name() < b.name();
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (a.args()[i] == b.args()[i]) continue;
    return term_lt(a.args()[i], b.args()[i], ord);
  }
  return false;
}

}  // namespace icc
