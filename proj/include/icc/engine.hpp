#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "icc/error.hpp"
#include "icc/program.hpp"
#include "icc/term.hpp"

namespace icc {

struct EvalBudget {
  std::size_t max_steps = 10'000'000;
  std::size_t max_term_size = 100'000;
  std::size_t max_cache_entries = 1'000'000;  // 0 disables memoization
  std::size_t max_depth = 4'000;              // nested calls; keeps the native stack bounded
};

enum class EvalStatus { normal_form, stuck, budget_exhausted, divergent };

inline const char* to_string(EvalStatus s) {
  switch (s) {
    case EvalStatus::normal_form: return "normal_form";
    case EvalStatus::stuck: return "stuck";
    case EvalStatus::budget_exhausted: return "budget_exhausted";
    case EvalStatus::divergent: return "divergent";
  }
  return "?";
}

struct EvalStats {
  std::size_t steps = 0;
  std::size_t cache_entries = 0;
  std::size_t cache_total_size = 0;  // sum over entries of |f(args)| + |value(s)|
  std::size_t max_term_size = 0;
  EvalStatus status = EvalStatus::normal_form;
  std::string detail;
};

inline std::string format_stats(const EvalStats& s) {
  std::ostringstream os;
  os << "steps=" << s.steps << '\n'
     << "cache_entries=" << s.cache_entries << '\n'
     << "cache_total_size=" << s.cache_total_size << '\n'
     << "max_term_size=" << s.max_term_size << '\n'
     << "status=" << to_string(s.status) << '\n';
  return os.str();
}

/// Called once per rule application with the rule index, the redex f(args)
/// and the instantiated right-hand side.
using StepObserver = std::function<void(std::size_t, const Term&, const Term&)>;

struct CallTreeNode {
  SymbolRef function;
  std::vector<Term> args;
  std::optional<Term> result;
  std::vector<std::size_t> children;
  bool memo_hit = false;
};

/// Calls with evaluated arguments, parent to child along the call relation.
/// Memo hits appear as leaves.
struct CallTree {
  std::vector<CallTreeNode> nodes;
  std::vector<std::size_t> roots;
  EvalStatus status = EvalStatus::normal_form;
  std::optional<Term> value;
  EvalStats stats;

  std::size_t depth() const {
    std::function<std::size_t(std::size_t)> d = [&](std::size_t i) {
      std::size_t best = 0;
      for (std::size_t c : nodes[i].children) best = std::max(best, d(c));
      return best + 1;
    };
    std::size_t best = 0;
    for (std::size_t r : roots) best = std::max(best, d(r));
    return best;
  }

  std::string to_text() const {
    std::string out;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t indent) {
      const auto& n = nodes[i];
      out.append(indent * 2, ' ');
      out += to_string(Term::apply(n.function, n.args));
      out += n.result ? " = " + to_string(*n.result) : std::string(" = ?");
      if (n.memo_hit) out += " [memo]";
      out += '\n';
      for (std::size_t c : n.children) rec(c, indent + 1);
    };
    for (std::size_t r : roots) rec(r, 0);
    return out;
  }
};

struct CacheEntry {
  SymbolRef function;
  std::vector<Term> args;
  std::vector<Term> values;  // one element in deterministic mode
};

namespace detail {

struct CNode {
  SymbolRef sym;  // null for variables
  std::size_t fn = std::numeric_limits<std::size_t>::max();
  int slot = -1;
  std::optional<Term> ground;  // ground constructor subterm, shared as is
  std::vector<CNode> kids;
};

struct CRule {
  std::size_t index;
  SymbolRef function;
  std::vector<CNode> patterns;
  CNode rhs;
  std::vector<std::string> slot_names;
};

// `sig`, when given, resolves function symbols by name so that terms built
// over another copy of the signature still index the right rule table.
inline CNode compile_node(const Term& t, std::vector<std::string>& slots, bool bind,
                          const Program* sig = nullptr) {
  CNode n;
  if (t.is_variable()) {
    auto it = std::find(slots.begin(), slots.end(), t.name());
    if (it == slots.end()) {
      if (!bind) throw ContractError("unbound variable '" + t.name() + "'");
      slots.push_back(t.name());
      it = slots.end() - 1;
    }
    n.slot = static_cast<int>(it - slots.begin());
    return n;
  }
  n.sym = t.symbol_ref();
  if (t.is_ground_constructor()) {
    n.ground = t;
    return n;
  }
  if (n.sym->is_function()) {
    if (sig) {
      SymbolRef own = sig->find(n.sym->name);
      if (!own || !same_symbol(*own, *n.sym)) {
        throw ContractError("function '" + n.sym->name + "' is not part of the program");
      }
      n.sym = own;
    }
    n.fn = n.sym->decl_index;
  }
  for (const Term& a : t.args()) n.kids.push_back(compile_node(a, slots, bind, sig));
  return n;
}

using Binds = std::vector<const Term*>;

inline bool match_node(const CNode& p, const Term& t, Binds& b) {
  if (p.slot >= 0) {
    const Term*& cur = b[static_cast<std::size_t>(p.slot)];
    if (!cur) {
      cur = &t;
      return true;
    }
    return *cur == t;
  }
  if (p.ground) return *p.ground == t;
  if (t.is_variable() || !same_symbol(*p.sym, t.symbol())) return false;
  for (std::size_t i = 0; i < p.kids.size(); ++i) {
    if (!match_node(p.kids[i], t.args()[i], b)) return false;
  }
  return true;
}

struct CallKey {
  std::size_t fn;
  std::vector<Term> args;
  std::size_t hash;

  CallKey(std::size_t f, std::vector<Term> a) : fn(f), args(std::move(a)) {
    std::size_t h = f * 0x9E3779B97F4A7C15ULL;
    for (const Term& t : args) h = (h ^ t.hash()) * 0x100000001B3ULL;
    hash = h;
  }
  friend bool operator==(const CallKey& x, const CallKey& y) {
    return x.fn == y.fn && x.hash == y.hash && x.args == y.args;
  }
};

struct CallKeyHash {
  std::size_t operator()(const CallKey& k) const noexcept { return k.hash; }
};

struct Abort {
  EvalStatus status;
  std::string detail;
};

inline bool value_lt(const Term& a, const Term& b) { return term_lt(a, b); }

inline void sort_unique(std::vector<Term>& v) {
  std::sort(v.begin(), v.end(), value_lt);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace detail

/// An evaluation session: compiled rules plus a memo cache that persists
/// across calls. Innermost, call-by-value; rules are tried in file order.
class Evaluator {
 public:
  struct Result {
    std::optional<Term> value;
    EvalStats stats;
  };
  struct NdResult {
    std::vector<Term> values;  // sorted by term_lt, duplicate free
    bool incomplete = false;
    EvalStats stats;
  };

  explicit Evaluator(Program p, EvalBudget budget = {}) : prog_(std::move(p)), budget_(budget) {
    rules_.resize(prog_.symbols().size());
    for (std::size_t i = 0; i < prog_.rules().size(); ++i) {
      const Rule& r = prog_.rules()[i];
      if (!r.lhs.is_function_rooted()) {
        throw ContractError("rule " + std::to_string(i + 1) + " has no function at the root");
      }
      detail::CRule cr{i, r.lhs.symbol_ref(), {}, {}, {}};
      for (const Term& a : r.lhs.args()) cr.patterns.push_back(detail::compile_node(a, cr.slot_names, true));
      cr.rhs = detail::compile_node(r.rhs, cr.slot_names, false);
      rules_.at(r.lhs.symbol().decl_index).push_back(std::move(cr));
    }
  }

  const Program& program() const noexcept { return prog_; }
  EvalBudget& budget() noexcept { return budget_; }
  void set_observer(StepObserver obs) { observer_ = std::move(obs); }

  void clear_cache() {
    det_.clear();
    nd_.clear();
    det_stored_ = nd_stored_ = 0;
    det_total_ = nd_total_ = 0;
  }

  /// Evaluates a ground term (constructors and function calls).
  Result evaluate(const Term& t) {
    begin();
    Result res;
    try {
      std::vector<std::string> none;
      detail::CNode n = detail::compile_node(t, none, false, &prog_);
      detail::Binds b;
      res.value = eval_node(n, b, 0);
      res.stats.status = EvalStatus::normal_form;
    } catch (const detail::Abort& a) {
      for (const detail::CallKey* k : active_) det_.erase(det_.find(*k));
      res.stats.status = a.status;
      res.stats.detail = a.detail;
    }
    active_.clear();
    fill_stats(res.stats, false);
    return res;
  }

  Result call(const std::string& f, std::vector<Term> args) {
    return evaluate(Term::apply(prog_.require(f), std::move(args)));
  }

  /// All constructor normal forms reachable by innermost rewriting, with
  /// every combination of argument outcomes explored.
  NdResult evaluate_nd(const Term& t) {
    begin();
    NdResult res;
    std::vector<std::string> none;
    detail::CNode n = detail::compile_node(t, none, false, &prog_);
    detail::Binds b;
    std::size_t low = kNoLow;
    res.values = eval_nd_node(n, b, low);
    if (exhausted_) {
      res.incomplete = true;
      res.stats.status = EvalStatus::budget_exhausted;
      res.stats.detail = exhausted_detail_;
    } else {
      res.stats.status = res.values.empty() ? EvalStatus::stuck : EvalStatus::normal_form;
    }
    fill_stats(res.stats, true);
    if (exhausted_) {
      // entries finished after exhaustion hold partial sets
      nd_.clear();
      nd_stored_ = nd_total_ = 0;
    }
    provisional_.clear();
    return res;
  }

  NdResult call_nd(const std::string& f, std::vector<Term> args) {
    return evaluate_nd(Term::apply(prog_.require(f), std::move(args)));
  }

  CallTree trace(const Term& t) {
    CallTree tree;
    tracer_ = &tree;
    Result r = evaluate(t);
    tracer_ = nullptr;
    trace_stack_.clear();
    tree.status = r.stats.status;
    tree.value = r.value;
    tree.stats = r.stats;
    return tree;
  }

  std::size_t cache_entries() const noexcept { return det_stored_; }
  std::size_t nd_cache_entries() const noexcept { return nd_stored_; }

  /// Visits (function, args, value) for every completed deterministic entry.
  template <class F>
  void for_each_entry(F&& f) const {
    for (const auto& [k, v] : det_) {
      if (v) f(*prog_.symbols()[k.fn], k.args, *v);
    }
  }

  /// Visits (function, args, values) for every completed set-valued entry.
  template <class F>
  void for_each_nd_entry(F&& f) const {
    for (const auto& [k, e] : nd_) {
      if (e.state == NdState::done) f(*prog_.symbols()[k.fn], k.args, e.values);
    }
  }

  std::vector<CacheEntry> snapshot(bool nd) const {
    std::vector<CacheEntry> out;
    if (nd) {
      for_each_nd_entry([&](const Symbol& s, const std::vector<Term>& a, const std::vector<Term>& v) {
        out.push_back({prog_.symbols()[s.decl_index], a, v});
      });
    } else {
      for_each_entry([&](const Symbol& s, const std::vector<Term>& a, const Term& v) {
        out.push_back({prog_.symbols()[s.decl_index], a, {v}});
      });
    }
    std::sort(out.begin(), out.end(), [](const CacheEntry& x, const CacheEntry& y) {
      if (x.function->decl_index != y.function->decl_index) {
        return x.function->decl_index < y.function->decl_index;
      }
      return std::lexicographical_compare(x.args.begin(), x.args.end(), y.args.begin(), y.args.end(),
                                          StructuralLess{});
    });
    return out;
  }

 private:
  static constexpr std::size_t kNoLow = std::numeric_limits<std::size_t>::max();

  enum class NdState { active, provisional, done };
  struct NdEntry {
    std::vector<Term> values;
    NdState state = NdState::active;
    std::size_t depth = 0;
    std::size_t low = kNoLow;
    std::size_t epoch = 0;
  };

  void begin() {
    steps_ = 0;
    max_size_ = 0;
    exhausted_ = false;
    exhausted_detail_.clear();
  }

  void fill_stats(EvalStats& s, bool nd) const {
    s.steps = steps_;
    s.cache_entries = nd ? nd_stored_ : det_stored_;
    s.cache_total_size = nd ? nd_total_ : det_total_;
    s.max_term_size = max_size_;
  }

  void note_size(const Term& t) {
    if (t.size() > max_size_) max_size_ = t.size();
    if (t.size() > budget_.max_term_size) {
      throw detail::Abort{EvalStatus::budget_exhausted, "max_term_size"};
    }
  }

  std::size_t entry_size(const detail::CallKey& k) const {
    std::size_t s = 1;
    for (const Term& a : k.args) s += a.size();
    return s;
  }

  Term instantiate(const detail::CRule& r, const detail::Binds& b) const {
    Substitution s;
    for (std::size_t i = 0; i < r.slot_names.size(); ++i) s.emplace(r.slot_names[i], *b[i]);
    return substitute(prog_.rules()[r.index].rhs, s);
  }

  // ---- deterministic ----

  Term eval_node(const detail::CNode& n, const detail::Binds& b, std::size_t depth) {
    if (n.slot >= 0) return *b[static_cast<std::size_t>(n.slot)];
    if (n.ground) return *n.ground;
    std::vector<Term> args;
    args.reserve(n.kids.size());
    for (const auto& k : n.kids) args.push_back(eval_node(k, b, depth));
    if (n.sym->is_constructor()) {
      Term t = Term::apply(n.sym, std::move(args));
      note_size(t);
      return t;
    }
    return call_det(n.fn, std::move(args), depth + 1);
  }

  Term call_det(std::size_t fn, std::vector<Term> args, std::size_t depth) {
    if (depth > budget_.max_depth) throw detail::Abort{EvalStatus::budget_exhausted, "max_depth"};
    auto [it, fresh] = det_.try_emplace(detail::CallKey(fn, std::move(args)));
    const detail::CallKey& key = it->first;
    if (!fresh) {
      if (!it->second) {
        throw detail::Abort{EvalStatus::divergent,
                            "call " + to_string(Term::apply(prog_.symbols()[fn], key.args)) +
                                " re-enters itself"};
      }
      if (tracer_) trace_leaf(fn, key.args, *it->second);
      return *it->second;
    }
    std::optional<Term>* slot = &it->second;
    for (const Term& a : key.args) max_size_ = std::max(max_size_, a.size());
    active_.push_back(&key);
    std::size_t node = tracer_ ? trace_enter(fn, key.args) : 0;

    Term result = apply_rules(fn, key.args, depth);

    if (tracer_) trace_exit(node, result);
    active_.pop_back();
    if (det_stored_ < budget_.max_cache_entries) {
      *slot = result;
      ++det_stored_;
      det_total_ += entry_size(key) + result.size();
    } else {
      det_.erase(det_.find(key));
    }
    return result;
  }

  Term apply_rules(std::size_t fn, const std::vector<Term>& args, std::size_t depth) {
    detail::Binds b;
    for (const detail::CRule& r : rules_[fn]) {
      b.assign(r.slot_names.size(), nullptr);
      bool ok = true;
      for (std::size_t i = 0; ok && i < args.size(); ++i) ok = detail::match_node(r.patterns[i], args[i], b);
      if (!ok) continue;
      if (steps_ >= budget_.max_steps) throw detail::Abort{EvalStatus::budget_exhausted, "max_steps"};
      ++steps_;
      if (observer_) observer_(r.index, Term::apply(r.function, args), instantiate(r, b));
      return eval_node(r.rhs, b, depth);
    }
    throw detail::Abort{EvalStatus::stuck,
                        "no rule applies to " + to_string(Term::apply(prog_.symbols()[fn], args))};
  }

  std::size_t trace_enter(std::size_t fn, const std::vector<Term>& args) {
    std::size_t id = tracer_->nodes.size();
    tracer_->nodes.push_back({prog_.symbols()[fn], args, std::nullopt, {}, false});
    if (trace_stack_.empty()) {
      tracer_->roots.push_back(id);
    } else {
      tracer_->nodes[trace_stack_.back()].children.push_back(id);
    }
    trace_stack_.push_back(id);
    return id;
  }
  void trace_exit(std::size_t id, const Term& result) {
    tracer_->nodes[id].result = result;
    trace_stack_.pop_back();
  }
  void trace_leaf(std::size_t fn, const std::vector<Term>& args, const Term& result) {
    std::size_t id = trace_enter(fn, args);
    tracer_->nodes[id].memo_hit = true;
    trace_exit(id, result);
  }

  // ---- non-deterministic ----

  bool step_nd() {
    if (exhausted_) return false;
    if (steps_ >= budget_.max_steps) {
      exhausted_ = true;
      exhausted_detail_ = "max_steps";
      return false;
    }
    ++steps_;
    return true;
  }

  bool size_ok(const Term& t) {
    if (t.size() > max_size_) max_size_ = t.size();
    if (t.size() > budget_.max_term_size) {
      exhausted_ = true;
      exhausted_detail_ = "max_term_size";
      return false;
    }
    return true;
  }

  std::vector<Term> eval_nd_node(const detail::CNode& n, const detail::Binds& b, std::size_t& low) {
    if (exhausted_) return {};
    if (n.slot >= 0) return {*b[static_cast<std::size_t>(n.slot)]};
    if (n.ground) return {*n.ground};
    std::vector<std::vector<Term>> sets;
    sets.reserve(n.kids.size());
    for (const auto& k : n.kids) {
      sets.push_back(eval_nd_node(k, b, low));
      if (sets.back().empty()) return {};
    }
    std::vector<Term> out;
    std::vector<std::size_t> idx(sets.size(), 0);
    std::vector<Term> tuple;
    bool more = true;
    while (more) {
      tuple.clear();
      for (std::size_t i = 0; i < sets.size(); ++i) tuple.push_back(sets[i][idx[i]]);
      if (n.sym->is_constructor()) {
        Term t = Term::apply(n.sym, tuple);
        if (!size_ok(t)) return {};
        out.push_back(std::move(t));
      } else {
        std::vector<Term> r = call_nd_key(n.fn, tuple, low);
        if (exhausted_) return {};
        out.insert(out.end(), r.begin(), r.end());
      }
      more = false;
      for (std::size_t i = sets.size(); i-- > 0;) {
        if (++idx[i] < sets[i].size()) {
          more = true;
          break;
        }
        idx[i] = 0;
      }
    }
    // odometer order over sorted argument sets is already term_lt order
    if (!n.sym->is_constructor()) detail::sort_unique(out);
    return out;
  }

  std::vector<Term> call_nd_key(std::size_t fn, const std::vector<Term>& args, std::size_t& low) {
    std::size_t depth = nd_depth_ + 1;
    if (depth > budget_.max_depth) {
      exhausted_ = true;
      exhausted_detail_ = "max_depth";
      return {};
    }
    auto [it, fresh] = nd_.try_emplace(detail::CallKey(fn, args));
    NdEntry& e = it->second;
    const detail::CallKey& key = it->first;
    if (!fresh) {
      if (e.state == NdState::done) return e.values;
      if (e.state == NdState::active) {
        low = std::min(low, e.depth);
        return e.values;
      }
      if (e.epoch == epoch_) {  // provisional, already refreshed this round
        low = std::min(low, e.low);
        return e.values;
      }
    }
    e.state = NdState::active;
    e.depth = depth;
    for (const Term& a : key.args) max_size_ = std::max(max_size_, a.size());
    ++nd_depth_;
    std::size_t prov_mark = provisional_.size();
    bool outer_changed = changed_;

    while (true) {
      changed_ = false;
      std::size_t my_low = kNoLow;
      std::vector<Term> acc = e.values;
      detail::Binds b;
      for (const detail::CRule& r : rules_[fn]) {
        b.assign(r.slot_names.size(), nullptr);
        bool ok = true;
        for (std::size_t i = 0; ok && i < key.args.size(); ++i) {
          ok = detail::match_node(r.patterns[i], key.args[i], b);
        }
        if (!ok) continue;
        if (!step_nd()) break;
        std::vector<Term> vs = eval_nd_node(r.rhs, b, my_low);
        acc.insert(acc.end(), vs.begin(), vs.end());
      }
      detail::sort_unique(acc);
      bool grew = acc.size() != e.values.size();
      e.values = std::move(acc);
      if (grew) changed_ = true;
      if (exhausted_ || my_low >= depth) {
        if (my_low == depth && changed_ && !exhausted_) {
          ++epoch_;
          continue;  // a cycle through this call: iterate to a fixpoint
        }
        e.state = NdState::done;
        for (std::size_t i = prov_mark; i < provisional_.size(); ++i) {
          auto pit = nd_.find(*provisional_[i]);
          if (pit != nd_.end() && pit->second.state == NdState::provisional) finish_nd(pit);
        }
        provisional_.resize(prov_mark);
        --nd_depth_;
        changed_ = outer_changed || grew;
        std::vector<Term> out = e.values;
        finish_nd(nd_.find(key));
        return out;
      }
      // depends on a caller that is still being expanded
      e.state = NdState::provisional;
      e.low = my_low;
      e.epoch = epoch_;
      provisional_.push_back(&key);
      low = std::min(low, my_low);
      --nd_depth_;
      changed_ = outer_changed || changed_;
      return e.values;
    }
  }

  template <class It>
  void finish_nd(It it) {
    it->second.state = NdState::done;
    if (nd_stored_ < budget_.max_cache_entries) {
      ++nd_stored_;
      std::size_t s = entry_size(it->first);
      for (const Term& v : it->second.values) s += v.size();
      nd_total_ += s;
    } else {
      nd_.erase(it);
    }
  }

  Program prog_;
  EvalBudget budget_;
  std::vector<std::vector<detail::CRule>> rules_;  // by decl_index
  StepObserver observer_;

  std::unordered_map<detail::CallKey, std::optional<Term>, detail::CallKeyHash> det_;
  std::vector<const detail::CallKey*> active_;
  std::size_t det_stored_ = 0;
  std::size_t det_total_ = 0;

  std::unordered_map<detail::CallKey, NdEntry, detail::CallKeyHash> nd_;
  std::vector<const detail::CallKey*> provisional_;
  std::size_t nd_stored_ = 0;
  std::size_t nd_total_ = 0;
  std::size_t nd_depth_ = 0;
  std::size_t epoch_ = 0;
  bool changed_ = false;

  std::size_t steps_ = 0;
  std::size_t max_size_ = 0;
  bool exhausted_ = false;
  std::string exhausted_detail_;

  CallTree* tracer_ = nullptr;
  std::vector<std::size_t> trace_stack_;
};

struct CbvOutcome {
  std::optional<Term> value;
  std::vector<CacheEntry> cache;
  EvalStats stats;
};

struct NdOutcome {
  std::vector<Term> values;
  bool incomplete = false;
  std::vector<CacheEntry> cache;
  EvalStats stats;
};

namespace detail {
inline Term make_call(const Program& p, const Symbol& f, std::vector<Term> args) {
  SymbolRef s = p.require(f.name);
  if (!s->is_function()) throw ContractError("'" + f.name + "' is not a function");
  for (const Term& a : args) {
    if (!a.is_ground_constructor()) {
      throw ContractError("argument " + to_string(a) + " is not a ground constructor term");
    }
  }
  return Term::apply(s, std::move(args));
}
}  // namespace detail

inline CbvOutcome eval_cbv(const Program& p, const Symbol& f, std::vector<Term> args,
                           const EvalBudget& budget = {}) {
  Term call = detail::make_call(p, f, std::move(args));
  Evaluator ev(p, budget);
  auto r = ev.evaluate(call);
  return {r.value, ev.snapshot(false), r.stats};
}

inline NdOutcome eval_nd(const Program& p, const Symbol& f, std::vector<Term> args,
                         const EvalBudget& budget = {}) {
  Term call = detail::make_call(p, f, std::move(args));
  Evaluator ev(p, budget);
  auto r = ev.evaluate_nd(call);
  return {r.values, r.incomplete, ev.snapshot(true), r.stats};
}

/// The term_lt-maximum of a normal-form set; none when the set is empty.
inline std::optional<Term> max_value(const std::vector<Term>& values, const TermOrder& ord = {}) {
  if (values.empty()) return std::nullopt;
  const Term* best = &values.front();
  for (const Term& v : values) {
    if (term_lt(*best, v, ord)) best = &v;
  }
  return *best;
}

inline std::optional<Term> nd_value(const Program& p, const Symbol& f, std::vector<Term> args,
                                    const EvalBudget& budget = {}) {
  auto r = eval_nd(p, f, std::move(args), budget);
  return max_value(r.values);
}

inline CallTree trace_call_tree(const Program& p, const Symbol& f, std::vector<Term> args,
                                const EvalBudget& budget = {}) {
  Term call = detail::make_call(p, f, std::move(args));
  Evaluator ev(p, budget);
  return ev.trace(call);
}

}  // namespace icc
