#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <random>
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
#include "icc/verdict.hpp"

namespace icc {

using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

/// Expression over {constant, variable, +, *, max}. Immutable and shared,
/// so composing interpretations does not copy subtrees.
class Expr {
 public:
  enum class Kind { constant, variable, add, mul, max };

  static Expr constant(Rational v) {
    if (v < 0) throw ContractError("negative constant " + icc::to_string(v));
    auto n = std::make_shared<Node>();
    n->kind = Kind::constant;
    n->value = std::move(v);
    return Expr(std::move(n));
  }
  static Expr variable(std::size_t index) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::variable;
    n->index = index;
    n->arity = index + 1;
    return Expr(std::move(n));
  }
  static Expr add(std::vector<Expr> xs) { return combine(Kind::add, std::move(xs)); }
  static Expr mul(std::vector<Expr> xs) { return combine(Kind::mul, std::move(xs)); }
  static Expr max(std::vector<Expr> xs) { return combine(Kind::max, std::move(xs)); }

  Kind kind() const noexcept { return node_->kind; }
  const Rational& value() const noexcept { return node_->value; }
  std::size_t index() const noexcept { return node_->index; }
  const std::vector<Expr>& args() const noexcept { return node_->args; }
  /// One more than the largest variable index, 0 when closed.
  std::size_t arity() const noexcept { return node_->arity; }

 private:
  struct Node {
    Kind kind = Kind::constant;
    Rational value;
    std::size_t index = 0;
    std::size_t arity = 0;
    std::vector<Expr> args;
  };
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static Expr combine(Kind k, std::vector<Expr> xs) {
    if (xs.empty()) throw ContractError("empty operand list");
    if (xs.size() == 1) return xs.front();
    auto n = std::make_shared<Node>();
    n->kind = k;
    for (const auto& x : xs) n->arity = std::max(n->arity, x.arity());
    n->args = std::move(xs);
    return Expr(std::move(n));
  }

  std::shared_ptr<const Node> node_;
};

inline Rational eval_expr(const Expr& e, const std::vector<Rational>& xs) {
  switch (e.kind()) {
    case Expr::Kind::constant: return e.value();
    case Expr::Kind::variable:
      if (e.index() >= xs.size()) {
        throw ContractError("eval_expr: variable x" + std::to_string(e.index()) + " but only " +
                            std::to_string(xs.size()) + " value(s)");
      }
      return xs[e.index()];
    case Expr::Kind::add: {
      Rational r = 0;
      for (const auto& a : e.args()) r += eval_expr(a, xs);
      return r;
    }
    case Expr::Kind::mul: {
      Rational r = 1;
      for (const auto& a : e.args()) r *= eval_expr(a, xs);
      return r;
    }
    case Expr::Kind::max: {
      Rational r = eval_expr(e.args().front(), xs);
      for (std::size_t i = 1; i < e.args().size(); ++i) r = std::max(r, eval_expr(e.args()[i], xs));
      return r;
    }
  }
  return 0;
}

/// Replaces variable i by xs[i].
inline Expr substitute(const Expr& e, const std::vector<Expr>& xs) {
  switch (e.kind()) {
    case Expr::Kind::constant: return e;
    case Expr::Kind::variable:
      if (e.index() >= xs.size()) throw ContractError("substitute: variable out of range");
      return xs[e.index()];
    default: {
      std::vector<Expr> args;
      args.reserve(e.args().size());
      for (const auto& a : e.args()) args.push_back(substitute(a, xs));
      if (e.kind() == Expr::Kind::add) return Expr::add(std::move(args));
      if (e.kind() == Expr::Kind::mul) return Expr::mul(std::move(args));
      return Expr::max(std::move(args));
    }
  }
}

/// Prints with variable names `names[i]`, or x1, x2, ... when absent.
inline std::string to_string(const Expr& e, const std::vector<std::string>& names = {}) {
  switch (e.kind()) {
    case Expr::Kind::constant: return to_string(e.value());
    case Expr::Kind::variable:
      return e.index() < names.size() ? names[e.index()] : "x" + std::to_string(e.index() + 1);
    case Expr::Kind::add:
    case Expr::Kind::mul: {
      bool mul = e.kind() == Expr::Kind::mul;
      std::string out;
      for (std::size_t i = 0; i < e.args().size(); ++i) {
        if (i) out += mul ? "*" : "+";
        std::string s = to_string(e.args()[i], names);
        if (mul && e.args()[i].kind() == Expr::Kind::add) s = "(" + s + ")";
        out += s;
      }
      return out;
    }
    case Expr::Kind::max: {
      std::string out = "max(";
      for (std::size_t i = 0; i < e.args().size(); ++i) {
        if (i) out += ",";
        out += to_string(e.args()[i], names);
      }
      return out + ")";
    }
  }
  return "?";
}

/// Polynomial with rational coefficients; monomials are exponent vectors.
class Poly {
 public:
  using Monomial = std::vector<unsigned>;

  explicit Poly(std::size_t nvars = 0) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const Rational& c) {
    Poly p(nvars);
    if (c != 0) p.terms_[Monomial(nvars, 0)] = c;
    return p;
  }
  static Poly variable(std::size_t nvars, std::size_t i) {
    Poly p(nvars);
    Monomial m(nvars, 0);
    m[i] = 1;
    p.terms_[m] = 1;
    return p;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }

  Rational coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }
  Rational constant_term() const { return coefficient(Monomial(nvars_, 0)); }

  Poly operator+(const Poly& o) const {
    Poly r = *this;
    for (const auto& [m, c] : o.terms_) r.accumulate(m, c);
    return r;
  }
  Poly operator*(const Poly& o) const {
    Poly r(nvars_);
    for (const auto& [m1, c1] : terms_) {
      for (const auto& [m2, c2] : o.terms_) {
        Monomial m(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = m1[i] + m2[i];
        r.accumulate(m, c1 * c2);
      }
    }
    return r;
  }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator<(const Poly& o) const { return terms_ < o.terms_; }

  /// x_i := y_i + floor for every variable.
  Poly shifted(const Rational& floor) const {
    if (floor == 0) return *this;
    Poly r = constant(nvars_, 0);
    for (const auto& [m, c] : terms_) {
      Poly t = constant(nvars_, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        Poly lin = variable(nvars_, i) + constant(nvars_, floor);
        for (unsigned k = 0; k < m[i]; ++k) t = t * lin;
      }
      r = r + t;
    }
    return r;
  }

 private:
  void accumulate(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::size_t nvars_;
  std::map<Monomial, Rational> terms_;
};

/// Max-free branches: e equals the pointwise max of the result (values
/// are nonnegative, so + and * distribute over max).
inline std::vector<Poly> max_branches(const Expr& e, std::size_t nvars) {
  switch (e.kind()) {
    case Expr::Kind::constant: return {Poly::constant(nvars, e.value())};
    case Expr::Kind::variable: return {Poly::variable(nvars, e.index())};
    case Expr::Kind::max: {
      std::vector<Poly> out;
      for (const auto& a : e.args()) {
        for (auto& p : max_branches(a, nvars)) out.push_back(std::move(p));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }
    default: {
      bool mul = e.kind() == Expr::Kind::mul;
      std::vector<Poly> acc = max_branches(e.args().front(), nvars);
      for (std::size_t i = 1; i < e.args().size(); ++i) {
        auto rhs = max_branches(e.args()[i], nvars);
        std::vector<Poly> next;
        next.reserve(acc.size() * rhs.size());
        for (const auto& a : acc) {
          for (const auto& b : rhs) next.push_back(mul ? a * b : a + b);
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        acc = std::move(next);
      }
      return acc;
    }
  }
}

enum class CompareMode { strict, weak };

struct Verdict {
  VerdictStatus status = VerdictStatus::unknown;
  std::vector<Rational> assignment;  // set when falsified
  Rational lhs_value;
  Rational rhs_value;
  std::string detail;

  bool verified() const noexcept { return status == VerdictStatus::verified; }
  bool falsified() const noexcept { return status == VerdictStatus::falsified; }
};

namespace detail {

inline bool dominates(const Poly& p, const Poly& q, CompareMode mode) {
  for (const auto& [m, c] : q.terms()) {
    if (p.coefficient(m) < c) return false;
  }
  return mode == CompareMode::weak || p.constant_term() > q.constant_term();
}

inline bool holds(const Rational& a, const Rational& b, CompareMode mode) {
  return mode == CompareMode::strict ? a > b : a >= b;
}

}  // namespace detail

struct SampleOptions {
  std::size_t samples = 10'000;
  Rational width = 1000;
  std::uint64_t seed = 0;
};

/// Decides p > q (strict) or p >= q (weak) over [floor, oo)^n. Sound but
/// incomplete: `verified` comes from a coefficient certificate on every max
/// branch of q, `falsified` from a concrete point.
inline Verdict compare_exprs(const Expr& p, const Expr& q, CompareMode mode, const Rational& floor = 1,
                             const SampleOptions& opts = {}) {
  std::size_t n = std::max(p.arity(), q.arity());
  auto ps = max_branches(p, n);
  auto qs = max_branches(q, n);
  std::vector<Poly> pshift;
  for (const auto& b : ps) pshift.push_back(b.shifted(floor));
  bool all = true;
  for (const auto& qb : qs) {
    Poly qsh = qb.shifted(floor);
    bool covered = false;
    for (const auto& pb : pshift) {
      if (detail::dominates(pb, qsh, mode)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      all = false;
      break;
    }
  }
  Verdict v;
  if (all) {
    v.status = VerdictStatus::verified;
    v.detail = "coefficient dominance after x := y + " + to_string(floor);
    return v;
  }

  auto test = [&](const std::vector<Rational>& xs) {
    Rational a = eval_expr(p, xs), b = eval_expr(q, xs);
    if (detail::holds(a, b, mode)) return false;
    v.status = VerdictStatus::falsified;
    v.assignment = xs;
    v.lhs_value = a;
    v.rhs_value = b;
    v.detail = to_string(a) + (mode == CompareMode::strict ? " <= " : " < ") + to_string(b);
    return true;
  };
  std::size_t budget = opts.samples;
  // corners first: each variable at floor, floor+1 or floor+width
  if (n <= 8) {
    const Rational pts[3] = {floor, floor + 1, floor + opts.width};
    std::size_t combos = 1;
    for (std::size_t i = 0; i < n; ++i) combos *= 3;
    for (std::size_t c = 0; c < combos && budget > 0; ++c, --budget) {
      std::vector<Rational> xs(n);
      std::size_t k = c;
      for (std::size_t i = 0; i < n; ++i, k /= 3) xs[i] = pts[k % 3];
      if (test(xs)) return v;
    }
  }
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> dist(0, 1'000'000);
  for (; budget > 0; --budget) {
    std::vector<Rational> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = floor + opts.width * Rational(dist(rng), 1'000'000);
    if (test(xs)) return v;
  }
  v.status = VerdictStatus::unknown;
  v.detail = "no certificate and no counterexample in " + std::to_string(opts.samples) + " samples";
  return v;
}

/// Weak monotonicity holds structurally for every Max-Poly expression; strict
/// monotonicity is checked per argument as e[x_i := x_i + 1] > e.
inline Verdict check_monotonic(const Expr& e, std::size_t arity, CompareMode mode, const Rational& floor = 1,
                               const SampleOptions& opts = {}) {
  Verdict v;
  v.status = VerdictStatus::verified;
  if (mode == CompareMode::weak) {
    v.detail = "built from weakly monotone operations";
    return v;
  }
  for (std::size_t i = 0; i < arity; ++i) {
    std::vector<Expr> xs;
    for (std::size_t j = 0; j < arity; ++j) {
      xs.push_back(j == i ? Expr::add({Expr::variable(j), Expr::constant(1)}) : Expr::variable(j));
    }
    Verdict w = compare_exprs(substitute(e, xs), e, CompareMode::strict, floor, opts);
    if (!w.verified()) {
      w.detail = "argument " + std::to_string(i + 1) + ": " + w.detail;
      if (w.falsified()) w.assignment.resize(arity, floor);
      return w;
    }
  }
  v.detail = arity == 0 ? "no arguments" : "strict in every argument";
  return v;
}

/// e >= x_i for every argument i.
inline Verdict check_subterm_property(const Expr& e, std::size_t arity, const Rational& floor = 1,
                                      const SampleOptions& opts = {}) {
  for (std::size_t i = 0; i < arity; ++i) {
    Verdict w = compare_exprs(e, Expr::variable(i), CompareMode::weak, floor, opts);
    if (!w.verified()) {
      w.detail = "argument " + std::to_string(i + 1) + ": " + w.detail;
      if (w.falsified()) w.assignment.resize(arity, floor);
      return w;
    }
  }
  Verdict v;
  v.status = VerdictStatus::verified;
  v.detail = arity == 0 ? "no arguments" : "dominates every argument";
  return v;
}

/// Assignment of an expression to every symbol, over [floor, oo).
class Interpretation {
 public:
  struct Entry {
    std::size_t arity = 0;
    Expr expr = Expr::constant(0);
    std::vector<std::string> params;
    std::size_t line = 0;
  };

  Rational floor = 1;

  void assign(const std::string& name, std::size_t arity, Expr e, std::vector<std::string> params = {},
              std::size_t line = 0) {
    if (e.arity() > arity) {
      throw ContractError("interpretation of '" + name + "' uses a variable beyond its arity");
    }
    map_[name] = Entry{arity, std::move(e), std::move(params), line};
  }
  const Entry* find(const std::string& name) const {
    auto it = map_.find(name);
    return it == map_.end() ? nullptr : &it->second;
  }
  const Entry& at(const std::string& name) const {
    const Entry* e = find(name);
    if (!e) throw ContractError("no interpretation for '" + name + "'");
    return *e;
  }
  std::size_t size() const noexcept { return map_.size(); }

  /// Symbols of p without an interpretation, in declaration order.
  std::vector<std::string> missing(const Program& p) const {
    std::vector<std::string> out;
    for (const auto& s : p.symbols()) {
      if (!find(s->name)) out.push_back(s->name);
    }
    return out;
  }

 private:
  std::unordered_map<std::string, Entry> map_;
};

namespace detail {

/// Recursive-descent parser for the right-hand side of an interpretation line.
class ExprParser {
 public:
  ExprParser(std::string_view text, std::size_t line, std::size_t offset,
             const std::vector<std::string>& params)
      : s_(text), line_(line), offset_(offset), params_(params) {}

  Expr parse() {
    Expr e = sum();
    skip();
    if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, offset_ + i_ + 1, msg); }

  Expr sum() {
    std::vector<Expr> xs{product()};
    while (eat('+')) xs.push_back(product());
    return Expr::add(std::move(xs));
  }
  Expr product() {
    std::vector<Expr> xs{atom()};
    while (eat('*')) xs.push_back(atom());
    return Expr::mul(std::move(xs));
  }
  Rational integer() {
    std::size_t j = i_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    Rational r(boost::multiprecision::cpp_int(std::string(s_.substr(i_, j - i_))));
    i_ = j;
    return r;
  }
  Expr atom() {
    skip();
    if (i_ >= s_.size()) fail("expected an expression");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Expr e = sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational v = integer();
      if (i_ < s_.size() && s_[i_] == '.') {
        ++i_;
        std::size_t j = i_;
        Rational frac = integer();
        Rational scale = 1;
        for (; j < i_; ++j) scale *= 10;
        if (scale == 1) fail("expected digits after '.'");
        v += frac / scale;
      }
      if (eat('/')) {
        skip();
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("expected a denominator");
        Rational d = integer();
        if (d == 0) fail("zero denominator");
        v /= d;
      }
      return Expr::constant(v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() && is_ident_char(s_[j])) ++j;
      std::string name(s_.substr(i_, j - i_));
      std::size_t start = i_;
      i_ = j;
      if (name == "max") {
        if (!eat('(')) fail("expected '(' after max");
        std::vector<Expr> xs{sum()};
        while (eat(',')) xs.push_back(sum());
        if (!eat(')')) fail("expected ')'");
        return Expr::max(std::move(xs));
      }
      for (std::size_t k = 0; k < params_.size(); ++k) {
        if (params_[k] == name) return Expr::variable(k);
      }
      i_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t i_ = 0;
  std::size_t line_;
  std::size_t offset_;
  const std::vector<std::string>& params_;
};

}  // namespace detail

/// Lines `floor Q` and `sym(x,y) = expr` (or `sym = expr` for constants).
/// When `p` is given, symbols are checked against it and the result must
/// be total.
inline Interpretation parse_interpretation(std::string_view text, const Program* p = nullptr) {
  Interpretation in;
  auto lines = detail::split_lines(text);
  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    std::string line = lines[ln];
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::size_t i = 0;
    auto skip = [&] {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    };
    auto fail = [&](const std::string& msg) { throw ParseError(ln + 1, i + 1, msg); };
    auto ident = [&] {
      skip();
      std::size_t j = i;
      while (j < line.size() && is_ident_char(line[j])) ++j;
      if (j == i) fail("expected a name");
      std::string s = line.substr(i, j - i);
      i = j;
      return s;
    };
    skip();
    if (i == line.size()) continue;
    std::size_t name_col = i;
    std::string name = ident();
    skip();
    if (name == "floor" && i < line.size() && line[i] != '(' && line[i] != '=') {
      Expr e = detail::ExprParser(std::string_view(line).substr(i), ln + 1, i, {}).parse();
      if (e.kind() != Expr::Kind::constant) fail("floor must be a constant");
      in.floor = e.value();
      continue;
    }
    std::vector<std::string> params;
    if (i < line.size() && line[i] == '(') {
      ++i;
      skip();
      if (i < line.size() && line[i] == ')') {
        ++i;
      } else {
        while (true) {
          std::string v = ident();
          if (std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
            fail("parameter names cannot be numbers");
          }
          if (std::find(params.begin(), params.end(), v) != params.end()) fail("repeated parameter '" + v + "'");
          params.push_back(v);
          skip();
          if (i < line.size() && line[i] == ',') {
            ++i;
            continue;
          }
          if (i < line.size() && line[i] == ')') {
            ++i;
            break;
          }
          fail("expected ',' or ')'");
        }
      }
    }
    skip();
    if (i >= line.size() || line[i] != '=') fail("expected '='");
    ++i;
    Expr e = detail::ExprParser(std::string_view(line).substr(i), ln + 1, i, params).parse();
    if (in.find(name)) throw ParseError(ln + 1, name_col + 1, "'" + name + "' interpreted twice");
    if (p) {
      SymbolRef s = p->find(name);
      if (!s) throw ParseError(ln + 1, name_col + 1, "unknown symbol '" + name + "'");
      if (s->arity != params.size()) {
        throw ParseError(ln + 1, name_col + 1,
                         "'" + name + "' has arity " + std::to_string(s->arity) + ", interpretation takes " +
                             std::to_string(params.size()));
      }
    }
    std::size_t arity = params.size();
    in.assign(name, arity, std::move(e), std::move(params), ln + 1);
  }
  if (p) {
    auto miss = in.missing(*p);
    if (!miss.empty()) {
      std::string all;
      for (const auto& m : miss) all += (all.empty() ? "" : ", ") + m;
      throw ParseError(lines.size(), 1, "no interpretation for: " + all);
    }
  }
  return in;
}

inline Interpretation load_interpretation(const std::string& path, const Program* p = nullptr) {
  std::ifstream f(path);
  if (!f) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_interpretation(ss.str(), p);
}

/// Composes the interpretation along t; variable `vars[i]` becomes x_i.
inline Expr interp_term(const Interpretation& in, const Term& t, const std::vector<std::string>& vars) {
  if (t.is_variable()) {
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (vars[i] == t.name()) return Expr::variable(i);
    }
    throw ContractError("interp_term: variable '" + t.name() + "' has no index");
  }
  const auto& entry = in.at(t.name());
  if (t.arity() == 0) return entry.expr;
  std::vector<Expr> xs;
  xs.reserve(t.arity());
  for (const Term& a : t.args()) xs.push_back(interp_term(in, a, vars));
  return substitute(entry.expr, xs);
}

inline Expr interp_term(const Interpretation& in, const Term& t) { return interp_term(in, t, variables(t)); }

/// Value of a term with its variables bound by `env`, without building the
/// composed expression.
inline Rational interp_value(const Interpretation& in, const Term& t,
                             const std::map<std::string, Rational>& env = {}) {
  if (t.is_variable()) {
    auto it = env.find(t.name());
    if (it == env.end()) throw ContractError("interp_value: unbound variable '" + t.name() + "'");
    return it->second;
  }
  std::vector<Rational> xs;
  xs.reserve(t.arity());
  for (const Term& a : t.args()) xs.push_back(interp_value(in, a, env));
  return eval_expr(in.at(t.name()).expr, xs);
}

struct RuleVerdict {
  std::size_t rule;
  Verdict verdict;
};

/// [[lhs]] > [[rhs]] (strict) or >= (weak) for every rule.
inline std::vector<RuleVerdict> check_compatibility(const Program& p, const Interpretation& in, CompareMode mode,
                                                    const SampleOptions& opts = {}) {
  std::vector<RuleVerdict> out;
  for (std::size_t i = 0; i < p.rules().size(); ++i) {
    const Rule& r = p.rules()[i];
    auto vars = variables(r.lhs);
    out.push_back({i, compare_exprs(interp_term(in, r.lhs, vars), interp_term(in, r.rhs, vars), mode, in.floor, opts)});
  }
  return out;
}

/// Constructor interpretation of the shape x1 + ... + xn + c with c >= 1.
inline bool is_additive_expr(const Expr& e, std::size_t arity) {
  auto bs = max_branches(e, arity);
  if (bs.size() != 1) return false;
  const Poly& p = bs.front();
  std::size_t linear = 0;
  for (const auto& [m, c] : p.terms()) {
    unsigned deg = 0;
    for (unsigned k : m) deg += k;
    if (deg == 0) continue;
    if (deg != 1 || c != 1) return false;
    ++linear;
  }
  return linear == arity && p.constant_term() >= 1;
}

enum class InterpClass { strict, quasi, monotone, none };

inline const char* to_string(InterpClass c) {
  switch (c) {
    case InterpClass::strict: return "strict-interpretation";
    case InterpClass::quasi: return "quasi-interpretation";
    case InterpClass::monotone: return "monotone-interpretation";
    case InterpClass::none: return "none";
  }
  return "?";
}

struct SymbolVerdict {
  std::string symbol;
  Verdict verdict;
};

struct InterpReport {
  InterpClass cls = InterpClass::none;
  bool additive = false;
  bool strictly_monotone = true;     // (1)
  bool weakly_monotone = true;       // (2)
  bool subterm_property = true;      // (3)
  bool strictly_compatible = true;   // (4)
  bool weakly_compatible = true;     // (5)
  std::vector<SymbolVerdict> monotonicity;  // strict, per symbol
  std::vector<SymbolVerdict> subterm;
  std::vector<RuleVerdict> strict_rules;
  std::vector<RuleVerdict> weak_rules;
  std::vector<std::string> non_additive;  // constructors breaking additivity

  std::size_t unknown_count() const {
    std::size_t n = 0;
    for (const auto& v : monotonicity) n += v.verdict.status == VerdictStatus::unknown;
    for (const auto& v : subterm) n += v.verdict.status == VerdictStatus::unknown;
    for (const auto& v : strict_rules) n += v.verdict.status == VerdictStatus::unknown;
    for (const auto& v : weak_rules) n += v.verdict.status == VerdictStatus::unknown;
    return n;
  }
};

/// Strongest of strict (1,3,4), quasi (2,3,5), monotone (2,5).
inline InterpReport classify_interp(const Program& p, const Interpretation& in, const SampleOptions& opts = {}) {
  auto miss = in.missing(p);
  if (!miss.empty()) throw ContractError("interpretation is not total: '" + miss.front() + "' is missing");
  InterpReport r;
  r.additive = true;
  for (const auto& s : p.symbols()) {
    const auto& e = in.at(s->name);
    Verdict m = check_monotonic(e.expr, s->arity, CompareMode::strict, in.floor, opts);
    r.strictly_monotone = r.strictly_monotone && m.verified();
    r.monotonicity.push_back({s->name, std::move(m)});
    Verdict st = check_subterm_property(e.expr, s->arity, in.floor, opts);
    r.subterm_property = r.subterm_property && st.verified();
    r.subterm.push_back({s->name, std::move(st)});
    if (s->is_constructor() && !is_additive_expr(e.expr, s->arity)) {
      r.additive = false;
      r.non_additive.push_back(s->name);
    }
  }
  r.strict_rules = check_compatibility(p, in, CompareMode::strict, opts);
  r.weak_rules = check_compatibility(p, in, CompareMode::weak, opts);
  for (const auto& v : r.strict_rules) r.strictly_compatible = r.strictly_compatible && v.verdict.verified();
  for (const auto& v : r.weak_rules) r.weakly_compatible = r.weakly_compatible && v.verdict.verified();
  if (r.strictly_monotone && r.subterm_property && r.strictly_compatible) {
    r.cls = InterpClass::strict;
  } else if (r.weakly_monotone && r.subterm_property && r.weakly_compatible) {
    r.cls = InterpClass::quasi;
  } else if (r.weakly_monotone && r.weakly_compatible) {
    r.cls = InterpClass::monotone;
  }
  return r;
}

}  // namespace icc
