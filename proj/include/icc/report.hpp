#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "icc/consfree.hpp"
#include "icc/maxpoly.hpp"
#include "icc/overlap.hpp"
#include "icc/ppo.hpp"
#include "icc/program.hpp"
#include "icc/wellformed.hpp"

namespace icc {

enum class Cert { yes, no, unknown };

inline const char* to_string(Cert c) {
  switch (c) {
    case Cert::yes: return "yes";
    case Cert::no: return "no";
    case Cert::unknown: return "unknown";
  }
  return "?";
}

inline Cert cert_of(bool b) { return b ? Cert::yes : Cert::no; }

enum class ComplexityClass { ptime, nptime, pspace, none };

inline const char* to_string(ComplexityClass c) {
  switch (c) {
    case ComplexityClass::ptime: return "PTIME";
    case ComplexityClass::nptime: return "NPTIME";
    case ComplexityClass::pspace: return "PSPACE";
    case ComplexityClass::none: return "none";
  }
  return "?";
}

struct Certificates {
  Cert ppo = Cert::unknown;
  Cert strict_interp = Cert::unknown;
  Cert quasi_interp = Cert::unknown;
  Cert additive = Cert::unknown;
  Cert cons_free = Cert::unknown;
  Cert cons_preserving = Cert::unknown;
  Cert overlap_free = Cert::unknown;
};

/// Smallest class licensed by the certificates. Only combinations backed
/// by a characterization count; termination alone claims nothing.
inline ComplexityClass implied_class(const Certificates& c, Mode mode) {
  auto y = [](Cert x) { return x == Cert::yes; };
  bool strict_add = y(c.strict_interp) && y(c.additive);
  bool quasi = y(c.quasi_interp) || y(c.strict_interp);
  if (mode == Mode::confluent) {
    if (strict_add || (quasi && y(c.additive) && y(c.ppo)) || y(c.cons_preserving)) return ComplexityClass::ptime;
    return ComplexityClass::none;
  }
  if (y(c.cons_preserving)) return ComplexityClass::ptime;
  if (strict_add) return ComplexityClass::nptime;
  if (quasi && y(c.ppo)) return ComplexityClass::pspace;
  return ComplexityClass::none;
}

struct ClassificationReport {
  std::string program;
  Mode mode = Mode::confluent;
  Certificates certs;
  ComplexityClass evidence = ComplexityClass::none;
  VerdictStatus status = VerdictStatus::verified;

  std::string ppo_source;  // "given", "synthesized" or empty
  std::optional<PpoReport> ppo;
  std::optional<SynthesisResult> synthesis;
  std::optional<InterpReport> interp;
  std::optional<OverlapReport> overlaps;
  std::optional<ConsFreeReport> cons_free;
  std::optional<PreservationReport> preservation;
  std::string preservation_source;  // "given" or "canonical"
  std::uint64_t seed = 0;

  std::string to_kv() const {
    std::ostringstream os;
    os << "program=" << program << '\n'
       << "mode=" << to_string(mode) << '\n'
       << "ppo=" << to_string(certs.ppo) << '\n'
       << "strict_interp=" << to_string(certs.strict_interp) << '\n'
       << "quasi_interp=" << to_string(certs.quasi_interp) << '\n'
       << "additive=" << to_string(certs.additive) << '\n'
       << "cons_free=" << to_string(certs.cons_free) << '\n'
       << "constructor_preserving=" << to_string(certs.cons_preserving) << '\n'
       << "overlap_free=" << to_string(certs.overlap_free) << '\n'
       << "class=" << to_string(evidence) << '\n'
       << "seed=" << seed << '\n'
       << "status=" << to_string(status) << '\n';
    return os.str();
  }

  std::string to_text(const Program& p) const {
    std::ostringstream os;
    os << "program " << program << " (" << to_string(mode) << ", " << p.rules().size() << " rules)\n";
    if (overlaps) {
      os << "overlaps: " << overlaps->pairs.size() << " pair(s)";
      if (!overlaps->nonlinear_rules.empty()) os << ", " << overlaps->nonlinear_rules.size() << " non-left-linear rule(s)";
      os << '\n';
    }
    if (cons_free) {
      os << "cons-free: " << (cons_free->cons_free ? "yes" : "no");
      if (!cons_free->cons_free) {
        const auto& v = cons_free->violations.front();
        os << " (rule " << v.rule + 1 << " builds " << to_string(v.subterm) << ")";
      }
      os << '\n';
    }
    if (ppo) {
      os << "ppo (" << ppo_source << " precedence): " << (ppo->ok ? "all rules oriented" : "not all rules oriented")
         << '\n';
      for (const auto& v : ppo->rules) {
        if (!v.oriented) {
          const Rule& r = p.rules()[v.rule];
          os << "  rule " << v.rule + 1 << " not oriented: " << to_string(r.lhs) << " -> " << to_string(r.rhs) << '\n';
        }
      }
    } else if (synthesis) {
      os << "ppo: no precedence found (" << to_string(synthesis->status) << " after " << synthesis->nodes
         << " search nodes)\n";
    }
    if (synthesis && synthesis->precedence) {
      std::string prec = synthesis->precedence->to_text();
      os << "synthesized precedence:\n";
      if (prec.empty()) os << "  (empty)\n";
      std::istringstream in(prec);
      for (std::string line; std::getline(in, line);) os << "  " << line << '\n';
    }
    if (interp) {
      os << "interpretation: " << to_string(interp->cls) << (interp->additive ? ", additive" : ", not additive")
         << '\n';
      auto show = [&](const char* what, const std::vector<SymbolVerdict>& vs) {
        for (const auto& v : vs) {
          if (!v.verdict.verified()) {
            os << "  " << what << " " << v.symbol << ": " << to_string(v.verdict.status) << " (" << v.verdict.detail
               << ")\n";
          }
        }
      };
      show("strict monotonicity", interp->monotonicity);
      show("subterm property", interp->subterm);
      auto rules = [&](const char* what, const std::vector<RuleVerdict>& vs) {
        for (const auto& v : vs) {
          if (!v.verdict.verified()) {
            os << "  " << what << " rule " << v.rule + 1 << ": " << to_string(v.verdict.status) << " ("
               << v.verdict.detail << ")\n";
          }
        }
      };
      rules("strict compatibility", interp->strict_rules);
      if (interp->cls != InterpClass::strict) rules("weak compatibility", interp->weak_rules);
      for (const auto& c : interp->non_additive) os << "  constructor " << c << " is not of the form sum + c\n";
    }
    if (preservation) {
      os << "constructor preserving (" << preservation_source << " set interpretation): "
         << to_string(preservation->status) << " over " << preservation->samples_per_rule
         << " substitutions per rule, terms of size <= " << preservation->max_term_size << ", seed " << seed << '\n';
      for (const auto& v : preservation->violations) {
        os << "  rule " << v.rule + 1 << ": " << to_string(v.offending) << " from " << to_string(v.subterm)
           << (v.subset ? " is not in the interpretation of the lhs" : " has no cover") << '\n';
      }
    }
    os << "class evidence: " << to_string(evidence) << '\n';
    return os.str();
  }
};

struct CheckOptions {
  std::optional<Precedence> precedence;
  std::optional<Interpretation> interp;
  std::optional<SetInterpretation> set_interp;
  std::uint64_t seed = 1;
  std::size_t synthesis_budget = 1'000'000;
};

/// Runs every available check and derives the class evidence.
inline ClassificationReport classify_program(const Program& p, std::string name, const CheckOptions& opts) {
  ClassificationReport r;
  r.program = std::move(name);
  r.mode = p.mode;
  r.seed = opts.seed;
  bool falsified = false, unknown = false;

  r.overlaps = detect_overlaps(p);
  r.certs.overlap_free = cert_of(r.overlaps->pairs.empty());
  r.cons_free = is_cons_free(p);
  r.certs.cons_free = cert_of(r.cons_free->cons_free);

  if (opts.precedence) {
    r.ppo_source = "given";
    r.ppo = check_ppo(p, *opts.precedence);
    r.certs.ppo = cert_of(r.ppo->ok);
    falsified = falsified || !r.ppo->ok;
  } else {
    r.synthesis = synthesize_precedence(p, opts.synthesis_budget);
    if (r.synthesis->status == SynthesisStatus::found) {
      r.ppo_source = "synthesized";
      r.ppo = check_ppo(p, *r.synthesis->precedence);
      r.certs.ppo = Cert::yes;
    } else {
      r.certs.ppo = r.synthesis->status == SynthesisStatus::none ? Cert::no : Cert::unknown;
    }
  }

  if (opts.interp) {
    SampleOptions so;
    so.seed = opts.seed;
    r.interp = classify_interp(p, *opts.interp, so);
    r.certs.strict_interp = cert_of(r.interp->cls == InterpClass::strict);
    r.certs.quasi_interp = cert_of(r.interp->cls == InterpClass::strict || r.interp->cls == InterpClass::quasi);
    r.certs.additive = cert_of(r.interp->additive);
    if (r.interp->cls == InterpClass::none) falsified = true;
    if (r.interp->unknown_count() > 0) unknown = true;
  }

  PreservationOptions po;
  po.seed = opts.seed;
  if (opts.set_interp) {
    r.preservation_source = "given";
    r.preservation = check_constructor_preserving(p, *opts.set_interp, po);
    falsified = falsified || !r.preservation->verified();
  } else if (r.cons_free->cons_free) {
    r.preservation_source = "canonical";
    r.preservation = check_constructor_preserving(p, canonical_interp(p), po);
  }
  if (r.preservation) r.certs.cons_preserving = cert_of(r.preservation->verified());

  r.evidence = implied_class(r.certs, p.mode);
  r.status = falsified ? VerdictStatus::falsified : unknown ? VerdictStatus::unknown : VerdictStatus::verified;
  return r;
}

}  // namespace icc
