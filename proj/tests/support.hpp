#pragma once

#include <random>
#include <string>
#include <vector>

#include "icc/consfree.hpp"
#include "icc/parser.hpp"
#include "icc/program.hpp"

namespace icc::testing {

inline std::string fixture(const std::string& name) { return std::string(ICC_FIXTURE_DIR) + "/" + name; }

inline Program load(const std::string& name) { return load_program(fixture(name)); }

inline Term term(const Program& p, const std::string& text) { return parse_term(p, text, true); }

/// Random ground constructor term over the program's constructors.
inline Term random_value(const Program& p, std::mt19937_64& rng, std::size_t max_size = 10) {
  return random_constructor_term(p.constructors(), rng, max_size);
}

/// Binary word 0(1(...(eps))) from a string of digits.
inline Term word(const Program& p, const std::string& bits) {
  Term t = p.make("eps");
  for (auto it = bits.rbegin(); it != bits.rend(); ++it) t = p.make(std::string(1, *it), {t});
  return t;
}

inline Term list(const Program& p, const std::vector<Term>& xs) {
  Term t = p.make("nil");
  for (auto it = xs.rbegin(); it != xs.rend(); ++it) t = p.make("cons", {*it, t});
  return t;
}

inline Term tally(const Program& p, unsigned n) {
  Term t = p.make("0");
  while (n-- > 0) t = p.make("s", {t});
  return t;
}

}  // namespace icc::testing
