#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "icc/error.hpp"
#include "icc/program.hpp"
#include "icc/term.hpp"
#include "icc/wellformed.hpp"

namespace icc {

inline bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

namespace detail {

/// Tokenizer over one source line. Columns are 1-based.
class LineLexer {
 public:
  enum class Kind { ident, number, lparen, rparen, comma, slash, arrow, end };
  struct Token {
    Kind kind;
    std::string text;
    std::size_t column;
  };

  LineLexer(std::string_view line, std::size_t line_no) : line_no_(line_no) {
    std::size_t i = 0;
    while (i < line.size()) {
      char c = line[i];
      if (c == '#') break;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      std::size_t col = i + 1;
      if (is_ident_char(c)) {
        std::size_t j = i;
        bool digits = true;
        while (j < line.size() && is_ident_char(line[j])) {
          digits = digits && std::isdigit(static_cast<unsigned char>(line[j]));
          ++j;
        }
        toks_.push_back({digits ? Kind::number : Kind::ident, std::string(line.substr(i, j - i)), col});
        i = j;
        continue;
      }
      switch (c) {
        case '(': toks_.push_back({Kind::lparen, "(", col}); break;
        case ')': toks_.push_back({Kind::rparen, ")", col}); break;
        case ',': toks_.push_back({Kind::comma, ",", col}); break;
        case '/': toks_.push_back({Kind::slash, "/", col}); break;
        case '-':
          if (i + 1 < line.size() && line[i + 1] == '>') {
            toks_.push_back({Kind::arrow, "->", col});
            ++i;
            break;
          }
          [[fallthrough]];
        default:
          throw ParseError(line_no_, col, std::string("unexpected character '") + c + "'");
      }
      ++i;
    }
    toks_.push_back({Kind::end, "", line.size() + 1});
  }

  const Token& peek() const { return toks_[pos_]; }
  Token next() { return toks_[pos_ == toks_.size() - 1 ? pos_ : pos_++]; }
  bool at_end() const { return peek().kind == Kind::end; }

  Token expect(Kind k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what);
    return next();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string found = t.kind == Kind::end ? "end of line" : "'" + t.text + "'";
    throw ParseError(line_no_, t.column, msg + ", found " + found);
  }

  std::size_t line_no() const { return line_no_; }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t line_no_;
};

inline Term parse_term_tokens(const Program& p, LineLexer& lx, bool allow_vars) {
  using K = LineLexer::Kind;
  if (lx.peek().kind != K::ident && lx.peek().kind != K::number) lx.fail("expected a term");
  auto tok = lx.next();
  SymbolRef sym = p.find(tok.text);
  if (lx.peek().kind == K::lparen) {
    if (!sym) throw ParseError(lx.line_no(), tok.column, "undeclared symbol '" + tok.text + "'");
    lx.next();
    std::vector<Term> args;
    if (lx.peek().kind != K::rparen) {
      args.push_back(parse_term_tokens(p, lx, allow_vars));
      while (lx.peek().kind == K::comma) {
        lx.next();
        args.push_back(parse_term_tokens(p, lx, allow_vars));
      }
    }
    lx.expect(K::rparen, "')'");
    if (args.size() != sym->arity) {
      throw ParseError(lx.line_no(), tok.column,
                       "arity mismatch for '" + tok.text + "': expected " +
                           std::to_string(sym->arity) + ", got " + std::to_string(args.size()));
    }
    return Term::apply(sym, std::move(args));
  }
  if (sym) {
    if (sym->arity != 0) {
      throw ParseError(lx.line_no(), tok.column,
                       "arity mismatch for '" + tok.text + "': expected " +
                           std::to_string(sym->arity) + ", got 0");
    }
    return Term::constant(sym);
  }
  if (!allow_vars) throw ParseError(lx.line_no(), tok.column, "undeclared symbol '" + tok.text + "'");
  return Term::variable(tok.text);
}

inline std::vector<std::string> split_lines(std::string_view src) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= src.size()) {
    std::size_t nl = src.find('\n', start);
    if (nl == std::string_view::npos) nl = src.size();
    std::string line(src.substr(start, nl - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
    start = nl + 1;
  }
  return lines;
}

}  // namespace detail

struct ParseOptions {
  bool validate = true;  // run check_wellformed and reject on the first diagnostic
};

inline Program parse_program(std::string_view source, const ParseOptions& opts = {}) {
  using K = detail::LineLexer::Kind;
  Program p;
  auto lines = detail::split_lines(source);
  std::vector<std::size_t> rule_lines;
  bool seen_mode = false;
  std::string main_name;

  for (std::size_t ln = 0; ln < lines.size(); ++ln) {
    detail::LineLexer lx(lines[ln], ln + 1);
    if (lx.at_end()) continue;
    auto kw = lx.next();
    if (kw.kind != K::ident) throw ParseError(ln + 1, kw.column, "expected a directive");
    if (kw.text == "mode") {
      if (seen_mode) throw ParseError(ln + 1, kw.column, "mode declared twice");
      auto m = lx.expect(K::ident, "confluent or nondeterministic");
      if (m.text == "confluent") {
        p.mode = Mode::confluent;
      } else if (m.text == "nondeterministic") {
        p.mode = Mode::nondeterministic;
      } else {
        throw ParseError(ln + 1, m.column, "unknown mode '" + m.text + "'");
      }
      if (!lx.at_end()) lx.fail("expected end of line");
      seen_mode = true;
    } else if (kw.text == "constructors" || kw.text == "functions") {
      bool fun = kw.text == "functions";
      bool any = false;
      while (!lx.at_end()) {
        auto name = lx.next();
        if (fun && name.text == "main" && name.kind == K::ident && lx.peek().kind != K::slash) {
          if (!any) throw ParseError(ln + 1, name.column, "'main' must follow a function declaration");
          if (!main_name.empty()) throw ParseError(ln + 1, name.column, "main declared twice");
          main_name = p.symbols().back()->name;
          continue;
        }
        if (name.kind != K::ident && name.kind != K::number) {
          throw ParseError(ln + 1, name.column, "expected a symbol name");
        }
        lx.expect(K::slash, "'/'");
        auto ar = lx.expect(K::number, "an arity");
        if (p.find(name.text)) {
          throw ParseError(ln + 1, name.column, "symbol '" + name.text + "' declared twice");
        }
        std::size_t arity = std::stoul(ar.text);
        if (fun) {
          p.add_function(name.text, arity);
        } else {
          p.add_constructor(name.text, arity);
        }
        any = true;
      }
    } else if (kw.text == "rule") {
      rule_lines.push_back(ln);
    } else {
      throw ParseError(ln + 1, kw.column, "unknown directive '" + kw.text + "'");
    }
  }
  if (main_name.empty()) throw ParseError(lines.size(), 1, "no main function declared");
  p.set_main(main_name);

  for (std::size_t ln : rule_lines) {
    detail::LineLexer lx(lines[ln], ln + 1);
    lx.next();  // "rule"
    Term lhs = detail::parse_term_tokens(p, lx, true);
    lx.expect(K::arrow, "'->'");
    Term rhs = detail::parse_term_tokens(p, lx, true);
    if (!lx.at_end()) lx.fail("expected end of rule");
    p.add_rule(std::move(lhs), std::move(rhs), ln + 1);
  }

  if (opts.validate) {
    auto diags = check_wellformed(p);
    if (!diags.empty()) throw ParseError(diags.front().line, 1, diags.front().message);
  }
  return p;
}

inline Program load_program(const std::string& path, const ParseOptions& opts = {}) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_program(ss.str(), opts);
}

/// Parses a term over the program's signature. Identifiers that are not
/// declared become variables only when `allow_vars` is set.
inline Term parse_term(const Program& p, std::string_view text, bool allow_vars = false) {
  detail::LineLexer lx(text, 1);
  Term t = detail::parse_term_tokens(p, lx, allow_vars);
  if (!lx.at_end()) lx.fail("expected end of term");
  return t;
}

/// Canonical text form; parse_program(print_program(p)) reproduces p.
inline std::string print_program(const Program& p) {
  std::string out = "mode ";
  out += to_string(p.mode);
  out += '\n';
  const auto& syms = p.symbols();
  for (std::size_t i = 0; i < syms.size();) {
    SymbolKind k = syms[i]->kind;
    out += k == SymbolKind::constructor ? "constructors" : "functions";
    for (; i < syms.size() && syms[i]->kind == k; ++i) {
      out += ' ' + syms[i]->name + '/' + std::to_string(syms[i]->arity);
      if (p.main() && syms[i] == p.main()) out += " main";
    }
    out += '\n';
  }
  for (const Rule& r : p.rules()) {
    out += "rule " + to_string(r.lhs) + " -> " + to_string(r.rhs) + '\n';
  }
  return out;
}

}  // namespace icc
