// transforms.cpp

#include "omega/transforms.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "omega/error.hpp"
#include "omega/semantics.hpp"

namespace omega {

namespace {

using Mask = std::uint64_t;

void require_mask_width(std::size_t n) {
  check_limit(n, 63, "|Q| for a subset construction");
}

Mask bit(std::size_t q) { return Mask{1} << q; }

Mask to_mask(const StateSet& s) {
  Mask m = 0;
  s.for_each([&](std::size_t q) { m |= bit(q); });
  return m;
}

StateSet from_mask(Mask m, std::size_t universe) {
  StateSet s(universe);
  for (std::size_t q = 0; q < universe; ++q)
    if ((m & bit(q)) != 0) s.insert(q);
  return s;
}

std::vector<Mask> table_masks(const Automaton& a) {
  std::vector<Mask> out;
  for (const auto& f : a.table().sets()) out.push_back(to_mask(f));
  return out;
}

std::string set_name(const Automaton& a, Mask m) {
  std::string out = "[";
  bool first = true;
  for (std::size_t q = 0; q < a.num_states(); ++q) {
    if ((m & bit(q)) == 0) continue;
    if (!first) out += ',';
    out += a.state_name(static_cast<StateIndex>(q));
    first = false;
  }
  return out + "]";
}

std::string fresh_name(const std::vector<std::string>& taken, std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += '\'';
  return base;
}

struct SubsetKey {
  StateIndex q;
  Mask set;
  bool sink = false;
  friend bool operator==(const SubsetKey&, const SubsetKey&) = default;
};
struct SubsetKeyHash {
  std::size_t operator()(const SubsetKey& k) const {
    return std::hash<Mask>{}(k.set) * 1000003u ^ (k.q * 2u + (k.sink ? 1u : 0u));
  }
};

// Breadth-first construction from `roots` (the first is initial). `step`
// appends the successors of a key on one symbol.
template <typename Key, typename Hash, typename Step>
std::pair<std::vector<Key>, std::vector<Transition>> explore(const std::vector<Key>& roots,
                                                             std::size_t num_symbols, Step step,
                                                             const Limits& limits) {
  std::vector<Key> keys;
  std::unordered_map<Key, StateIndex, Hash> index;
  std::vector<Transition> ts;
  auto intern = [&](const Key& k) {
    auto [it, fresh] = index.emplace(k, static_cast<StateIndex>(keys.size()));
    if (fresh) {
      keys.push_back(k);
      check_limit(keys.size(), limits.constructed_states, "constructed state count");
    }
    return it->second;
  };
  for (const auto& r : roots) intern(r);
  std::vector<Key> next;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (SymbolIndex x = 0; x < num_symbols; ++x) {
      next.clear();
      step(Key(keys[i]), x, next);
      for (const auto& k : next) ts.push_back({static_cast<StateIndex>(i), x, intern(k)});
    }
  }
  return {std::move(keys), std::move(ts)};
}

std::vector<StateSet> singletons_of_support(const Automaton& a) {
  std::vector<StateSet> out;
  a.table().support().for_each([&](std::size_t q) {
    StateSet s(a.num_states());
    s.insert(q);
    out.push_back(std::move(s));
  });
  return out;
}

// Visited-set product shared by the A and Aprime constructions. `to_sink`
// decides, from the extended visited set, whether the step goes to ⊥.
template <typename ToSink>
std::pair<std::vector<SubsetKey>, std::vector<Transition>> visited_product(
    const Automaton& a, ToSink to_sink, bool keep_sink, const Limits& limits) {
  check_limit(a.num_states(), limits.powerset_states, "|Q| for the visited-set product");
  require_mask_width(a.num_states());
  auto step = [&](const SubsetKey& k, SymbolIndex x, std::vector<SubsetKey>& out) {
    if (k.sink) {
      out.push_back(k);
      return;
    }
    for (StateIndex q : a.successors(k.q, x)) {
      const Mask s = k.set | bit(q);
      out.push_back(to_sink(s) ? SubsetKey{0, 0, true} : SubsetKey{q, s, false});
    }
  };
  auto [keys, ts] = explore<SubsetKey, SubsetKeyHash>({SubsetKey{a.initial(), 0, false}},
                                                      a.alphabet().size(), step, limits);
  const bool has_sink = std::any_of(keys.begin(), keys.end(), [](auto& k) { return k.sink; });
  if (keep_sink && !has_sink) {
    const auto s = static_cast<StateIndex>(keys.size());
    keys.push_back({0, 0, true});
    for (SymbolIndex x = 0; x < a.alphabet().size(); ++x) ts.push_back({s, x, s});
  }
  return {std::move(keys), std::move(ts)};
}

std::vector<std::string> subset_names(const Automaton& a, const std::vector<SubsetKey>& keys) {
  std::vector<std::string> names;
  for (const auto& k : keys)
    names.push_back(k.sink ? std::string() : a.state_name(k.q) + "·" + set_name(a, k.set));
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (keys[i].sink) names[i] = fresh_name(names, "⊥");
  return names;
}

}  // namespace

// ---------------------------------------------------------------------------

Automaton a_to_run_meets(const Automaton& a, const Limits& limits) {
  const auto fs = table_masks(a);
  auto [keys, ts] = visited_product(a, [](Mask) { return false; }, false, limits);
  std::vector<StateSet> sets;
  for (StateIndex i = 0; i < keys.size(); ++i) {
    const Mask s = keys[i].set;
    if (std::any_of(fs.begin(), fs.end(), [&](Mask f) { return (f & ~s) == 0; })) {
      StateSet one(keys.size());
      one.insert(i);
      sets.push_back(std::move(one));
    }
  }
  auto names = subset_names(a, keys);
  return Automaton(a.alphabet(), std::move(names), std::move(ts), 0,
                   AcceptanceTable(keys.size(), sets));
}

Automaton run_meets_to_a(const Automaton& a) {
  return a.with_table(AcceptanceTable(a.num_states(), singletons_of_support(a)));
}

Automaton aprime_to_run_subseteq(const Automaton& a, const Limits& limits) {
  const auto fs = table_masks(a);
  auto covered = [&](Mask s) {
    return std::all_of(fs.begin(), fs.end(), [&](Mask f) { return (f & ~s) == 0; });
  };
  auto [keys, ts] = visited_product(a, covered, true, limits);
  StateSet keep(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (!keys[i].sink) keep.insert(i);
  auto names = subset_names(a, keys);
  return Automaton(a.alphabet(), std::move(names), std::move(ts), 0,
                   AcceptanceTable(keys.size(), {keep}));
}

Automaton run_subseteq_to_aprime(const Automaton& a, const Limits& limits) {
  const auto fs = table_masks(a);
  auto escapes = [&](Mask s) {
    return std::none_of(fs.begin(), fs.end(), [&](Mask f) { return (s & ~f) == 0; });
  };
  auto [keys, ts] = visited_product(a, escapes, true, limits);
  StateSet sink(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (keys[i].sink) sink.insert(i);
  auto names = subset_names(a, keys);
  return Automaton(a.alphabet(), std::move(names), std::move(ts), 0,
                   AcceptanceTable(keys.size(), {sink}));
}

Automaton complement_table(const Automaton& a) {
  std::vector<StateSet> sets;
  for (const auto& f : a.table().sets()) sets.push_back(f.complement());
  return a.with_table(AcceptanceTable(a.num_states(), sets));
}

// ---------------------------------------------------------------------------

namespace {

// Adds fresh states named `bases` (made unique) and routes every missing
// (p, x) to the first; the chain bases[i] → bases[i+1] on every letter ends
// in a self-loop.
Automaton complete_with_chain(const Automaton& a, const std::vector<std::string>& bases) {
  std::vector<std::string> names = a.state_names();
  const auto first = static_cast<StateIndex>(names.size());
  for (const auto& b : bases) names.push_back(fresh_name(names, b));
  std::vector<Transition> ts = a.transitions();
  const std::size_t k = a.alphabet().size();
  for (StateIndex q = 0; q < a.num_states(); ++q)
    for (SymbolIndex x = 0; x < k; ++x)
      if (a.successors(q, x).empty()) ts.push_back({q, x, first});
  for (std::size_t i = 0; i < bases.size(); ++i) {
    const auto s = static_cast<StateIndex>(first + i);
    const auto t = static_cast<StateIndex>(i + 1 < bases.size() ? s + 1 : s);
    for (SymbolIndex x = 0; x < k; ++x) ts.push_back({s, x, t});
  }
  std::vector<StateSet> sets;
  for (const auto& f : a.table().sets()) {
    StateSet g(names.size());
    f.for_each([&](std::size_t q) { g.insert(q); });
    sets.push_back(std::move(g));
  }
  return Automaton(a.alphabet(), std::move(names), std::move(ts), a.initial(),
                   AcceptanceTable(names.size(), sets));
}

}  // namespace

bool add_sink_sound(const Automaton& a, const Condition& cond) {
  if (!cond.is_pair()) {
    if (cond.name() != NamedCondition::kL) return false;
    return !a.table().contains(StateSet(a.num_states()));
  }
  switch (cond.kind()) {
    case StatKind::kRun: return cond.rel() != Rel::kMeets;
    case StatKind::kInf: return true;
    case StatKind::kFin:
    case StatKind::kNinf: return false;
  }
  return false;
}

Automaton add_sink(const Automaton& a, const Condition& cond) {
  if (!add_sink_sound(a, cond))
    throw PreconditionError("sink completion does not preserve the language under " +
                            cond.to_string());
  if (is_complete(a)) return a;
  return complete_with_chain(a, {"⊥"});
}

Automaton complete_for_fin(const Automaton& a) {
  if (is_complete(a)) return a;
  return complete_with_chain(a, {"⊥", "⊥'"});
}

// ---------------------------------------------------------------------------

Automaton inf_meets_to_L(const Automaton& a) {
  return a.with_table(AcceptanceTable(a.num_states(), singletons_of_support(a)));
}

namespace {

struct PairKey {
  StateIndex a, b;
  friend bool operator==(const PairKey&, const PairKey&) = default;
};
struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const { return (std::size_t{k.a} << 32) ^ k.b; }
};

StateIndex only_successor(const Automaton& a, StateIndex q, SymbolIndex x) {
  return a.successors(q, x).front();
}

// Round-robin counter over the members of `f`: state (q, i) waits for the
// i-th member; (q, k) marks a completed round.
Automaton degeneralize(const Automaton& a, const StateSet& f, const Limits& limits) {
  if (f.empty()) return a.with_table(AcceptanceTable(a.num_states(), {a.all_states()}));
  const auto members = f.members();
  const auto k = static_cast<StateIndex>(members.size());
  auto step = [&](const PairKey& key, SymbolIndex x, std::vector<PairKey>& out) {
    const StateIndex q = only_successor(a, key.a, x);
    StateIndex j = key.b == k ? 0 : key.b;
    if (q == members[j]) ++j;
    out.push_back({q, j});
  };
  auto [keys, ts] = explore<PairKey, PairKeyHash>({PairKey{a.initial(), 0}}, a.alphabet().size(),
                                                  step, limits);
  std::vector<std::string> names;
  StateSet accepting(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    names.push_back(a.state_name(keys[i].a) + "·" + std::to_string(keys[i].b));
    if (keys[i].b == k) accepting.insert(i);
  }
  return Automaton(a.alphabet(), std::move(names), std::move(ts), 0,
                   AcceptanceTable(keys.size(), {accepting}));
}

// Synchronous product of complete deterministic automata whose table is the
// union of both tables lifted to pairs.
Automaton product_union(const Automaton& x, const Automaton& y, const Limits& limits) {
  auto step = [&](const PairKey& key, SymbolIndex s, std::vector<PairKey>& out) {
    out.push_back({only_successor(x, key.a, s), only_successor(y, key.b, s)});
  };
  auto [keys, ts] = explore<PairKey, PairKeyHash>({PairKey{x.initial(), y.initial()}},
                                                  x.alphabet().size(), step, limits);
  std::vector<std::string> names;
  for (const auto& k : keys) names.push_back("(" + x.state_name(k.a) + "," + y.state_name(k.b) + ")");
  std::vector<StateSet> sets;
  for (const auto& f : x.table().sets()) {
    StateSet lifted(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i)
      if (f.contains(keys[i].a)) lifted.insert(i);
    sets.push_back(std::move(lifted));
  }
  for (const auto& f : y.table().sets()) {
    StateSet lifted(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i)
      if (f.contains(keys[i].b)) lifted.insert(i);
    sets.push_back(std::move(lifted));
  }
  return Automaton(x.alphabet(), std::move(names), std::move(ts), 0,
                   AcceptanceTable(keys.size(), sets));
}

}  // namespace

Automaton L_to_inf_meets(const Automaton& a, const Limits& limits) {
  if (!is_deterministic(a) || !is_complete(a))
    throw PreconditionError("L-to-inf-meets needs a complete deterministic automaton");
  const auto sets = a.table().sets();
  if (sets.empty()) return a.with_table(AcceptanceTable(a.num_states()));
  Automaton acc = degeneralize(a, sets.front(), limits);
  for (std::size_t i = 1; i < sets.size(); ++i)
    acc = product_union(acc, degeneralize(a, sets[i], limits), limits);
  return acc;
}

Automaton single_accepting_Lprime(const Automaton& a, const Limits& limits) {
  const StateSet support = a.table().support();
  if (support.empty()) {
    std::vector<Transition> ts;
    for (SymbolIndex x = 0; x < a.alphabet().size(); ++x) ts.push_back({0, x, 0});
    return Automaton(a.alphabet(), {"⊥"}, std::move(ts), 0,
                     AcceptanceTable(1, {StateSet(1, {0})}));
  }
  check_limit(support.count(), limits.powerset_member, "|∪𝓕| for the single-state reduction");
  require_mask_width(a.num_states());
  const Mask fbar = to_mask(support);
  StateIndex f = 0;
  bool have = false;
  support.for_each([&](std::size_t q) {
    if (!have || a.state_name(static_cast<StateIndex>(q)) < a.state_name(f)) {
      f = static_cast<StateIndex>(q);
      have = true;
    }
  });
  auto step = [&](const SubsetKey& k, SymbolIndex x, std::vector<SubsetKey>& out) {
    const bool reset = k.q == f && k.set == fbar;
    for (StateIndex q : a.successors(k.q, x))
      out.push_back({q, reset ? Mask{0} : ((k.set | bit(q)) & fbar), false});
  };
  auto [keys, ts] = explore<SubsetKey, SubsetKeyHash>(
      {SubsetKey{a.initial(), 0, false}, SubsetKey{f, fbar, false}}, a.alphabet().size(), step,
      limits);
  StateSet target(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (keys[i].q == f && keys[i].set == fbar) target.insert(i);
  auto names = subset_names(a, keys);
  return Automaton(a.alphabet(), std::move(names), std::move(ts), 0,
                   AcceptanceTable(keys.size(), {target}));
}

Automaton lprime_to_inf_subseteq(const Automaton& a) {
  if (a.table().size() != 1 || a.table().set(0).count() != 1)
    throw PreconditionError("lprime-to-inf-subseteq needs a table of one singleton {{f}}");
  return a.with_table(AcceptanceTable(a.num_states(), {a.table().set(0).complement()}));
}

// ---------------------------------------------------------------------------

Automaton fin_subseteq_to_fin_eq(const Automaton& a, const Limits& limits) {
  std::vector<StateSet> sets;
  for (const auto& f : a.table().sets()) {
    check_limit(f.count(), limits.powerset_member, "|F| for the powerset rewrite");
    const auto members = f.members();
    for (Mask sub = 0; sub < (Mask{1} << members.size()); ++sub) {
      StateSet s(a.num_states());
      for (std::size_t i = 0; i < members.size(); ++i)
        if ((sub & bit(i)) != 0) s.insert(members[i]);
      sets.push_back(std::move(s));
    }
  }
  return a.with_table(AcceptanceTable(a.num_states(), sets));
}

Automaton fin_meets_to_fin_eq(const Automaton& a, const Limits& limits) {
  check_limit(a.num_states(), limits.powerset_states, "|Q| for the powerset table");
  require_mask_width(a.num_states());
  const Mask support = to_mask(a.table().support());
  std::vector<StateSet> sets;
  for (Mask s = 0; s < (Mask{1} << a.num_states()); ++s)
    if ((s & support) != 0) sets.push_back(from_mask(s, a.num_states()));
  return a.with_table(AcceptanceTable(a.num_states(), sets));
}

Automaton inf_meets_to_fin_eq(const Automaton& a, const Limits& limits) {
  const std::size_t n = a.num_states();
  check_limit(n, limits.pair_product_states, "|Q| for the Q ∪ Q×Q construction");
  require_mask_width(n);
  auto pair = [n](StateIndex p1, StateIndex p2) { return static_cast<StateIndex>(n + p1 * n + p2); };
  std::vector<std::string> names = a.state_names();
  for (StateIndex p1 = 0; p1 < n; ++p1)
    for (StateIndex p2 = 0; p2 < n; ++p2) names.push_back(a.state_name(p1) + "·" + a.state_name(p2));

  std::vector<Transition> ts = a.transitions();
  for (const auto& t : a.transitions()) {
    ts.push_back({t.src, t.sym, pair(t.dst, t.src)});
    for (StateIndex p2 = 0; p2 < n; ++p2) ts.push_back({pair(t.src, p2), t.sym, t.dst});
  }

  // A pair state (p1, p2) in fin is meant to certify p2 ∈ run ∖ fin = inf.
  // That fails when the pair is entered from the initial state at position 0,
  // which run does not count; a fresh start state without guessing edges
  // keeps that first step out of the pair states.
  const StateSet support = a.table().support();
  StateIndex initial = a.initial();
  if (support.contains(a.initial())) {
    initial = static_cast<StateIndex>(names.size());
    names.push_back(fresh_name(names, a.state_name(a.initial()) + "ₛ"));
    for (const auto& t : a.transitions())
      if (t.src == a.initial()) ts.push_back({initial, t.sym, t.dst});
  }

  const std::size_t total = names.size();
  std::vector<StateSet> sets;
  for (StateIndex p1 = 0; p1 < n; ++p1)
    support.for_each([&](std::size_t p2) {
      for (Mask f = 0; f < (Mask{1} << n); ++f) {
        if ((f & bit(p2)) != 0) continue;  // F ∖ {p2} is reached from both F and F ∪ {p2}
        StateSet s(total);
        for (std::size_t q = 0; q < n; ++q)
          if ((f & bit(q)) != 0) s.insert(q);
        s.insert(pair(p1, static_cast<StateIndex>(p2)));
        sets.push_back(std::move(s));
      }
    });
  return Automaton(a.alphabet(), std::move(names), std::move(ts), initial,
                   AcceptanceTable(total, sets));
}

// ---------------------------------------------------------------------------

LanguageExpr LanguageExpr::leaf(Automaton a, Condition c) {
  LanguageExpr e;
  e.kind = Kind::kLeaf;
  e.automaton = std::make_shared<const Automaton>(std::move(a));
  e.cond = c;
  return e;
}

LanguageExpr LanguageExpr::join(Kind kind, std::vector<LanguageExpr> children) {
  if (children.empty()) throw PreconditionError("union and intersection need a child");
  LanguageExpr e;
  e.kind = kind;
  e.children = std::move(children);
  return e;
}

std::size_t LanguageExpr::leaf_count() const {
  if (kind == Kind::kLeaf) return 1;
  std::size_t n = 0;
  for (const auto& c : children) n += c.leaf_count();
  return n;
}

LanguageExpr dfa_fin_subseteq_decompose(const Automaton& a, const Limits& limits) {
  if (!is_deterministic(a)) throw PreconditionError("decomposition needs a deterministic automaton");
  const std::size_t n = a.num_states();
  check_limit(n, limits.pair_product_states, "|Q| for the (S, S') decomposition");
  require_mask_width(n);
  const auto fs = table_masks(a);
  const Condition run_sub = Condition::pair(StatKind::kRun, Rel::kSubseteq);
  std::vector<LanguageExpr> terms;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    // Sub-masks of s in increasing order.
    for (Mask sp = 0;; sp = (sp - s) & s) {
      const Mask fin = s & ~sp;
      if (std::any_of(fs.begin(), fs.end(), [&](Mask f) { return (fin & ~f) == 0; })) {
        std::vector<LanguageExpr> parts;
        parts.push_back(LanguageExpr::leaf(
            a.with_table(AcceptanceTable(n, {from_mask(s, n)})), run_sub));
        for (std::size_t q = 0; q < n; ++q)
          if ((sp & bit(q)) != 0)
            parts.push_back(LanguageExpr::leaf(
                a.with_table(AcceptanceTable(n, {from_mask(bit(q), n)})), cond::buchi()));
        terms.push_back(LanguageExpr::join(LanguageExpr::Kind::kIntersection, std::move(parts)));
      }
      if (sp == s) break;
    }
  }
  if (terms.empty())
    terms.push_back(LanguageExpr::leaf(a.with_table(AcceptanceTable(n)), run_sub));
  return LanguageExpr::join(LanguageExpr::Kind::kUnion, std::move(terms));
}

bool expr_accepts(const LanguageExpr& e, const LassoWord& w) {
  switch (e.kind) {
    case LanguageExpr::Kind::kLeaf: return accepts(*e.automaton, e.cond, w);
    case LanguageExpr::Kind::kUnion:
      return std::any_of(e.children.begin(), e.children.end(),
                         [&](const LanguageExpr& c) { return expr_accepts(c, w); });
    case LanguageExpr::Kind::kIntersection:
      return std::all_of(e.children.begin(), e.children.end(),
                         [&](const LanguageExpr& c) { return expr_accepts(c, w); });
  }
  return false;
}

std::string render_expr(const LanguageExpr& e) {
  switch (e.kind) {
    case LanguageExpr::Kind::kLeaf: {
      std::string c = e.cond.to_string();
      std::replace(c.begin(), c.end(), ' ', '-');
      std::string out = "(leaf " + c;
      const auto sets = e.automaton->table().sets();
      if (sets.empty()) out += " -";
      for (const auto& s : sets) out += " " + format_set(*e.automaton, s);
      return out + ")";
    }
    case LanguageExpr::Kind::kUnion:
    case LanguageExpr::Kind::kIntersection: {
      std::string out = e.kind == LanguageExpr::Kind::kUnion ? "(union" : "(inter";
      for (const auto& c : e.children) out += " " + render_expr(c);
      return out + ")";
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

namespace {

void require_source(std::string_view transform, const Condition& have, const Condition& want) {
  if (!(have == want))
    throw PreconditionError(std::string(transform) + " reads its input under " + want.to_string() +
                            ", got " + have.to_string());
}

TransformOutcome outcome(Automaton a, Condition c) {
  TransformOutcome o;
  o.automaton = std::move(a);
  o.cond = c;
  return o;
}

template <typename Fn>
TransformInfo simple(std::string name, Condition from, Condition to, Fn fn) {
  return {name, from.to_string(), to.to_string(),
          [name, from, to, fn](const Automaton& a, const Condition& c) {
            require_source(name, c, from);
            return outcome(fn(a), to);
          }};
}

Condition P(StatKind k, Rel r) { return Condition::pair(k, r); }

}  // namespace

const std::vector<TransformInfo>& transform_registry() {
  static const std::vector<TransformInfo> registry = [] {
    using SK = StatKind;
    std::vector<TransformInfo> r;
    r.push_back(simple("a-to-run-meets", cond::A(), P(SK::kRun, Rel::kMeets),
                       [](const Automaton& a) { return a_to_run_meets(a); }));
    r.push_back(simple("run-meets-to-a", P(SK::kRun, Rel::kMeets), cond::A(), run_meets_to_a));
    r.push_back(simple("aprime-to-run-subseteq", cond::Aprime(), P(SK::kRun, Rel::kSubseteq),
                       [](const Automaton& a) { return aprime_to_run_subseteq(a); }));
    r.push_back(simple("run-subseteq-to-aprime", P(SK::kRun, Rel::kSubseteq), cond::Aprime(),
                       [](const Automaton& a) { return run_subseteq_to_aprime(a); }));
    r.push_back({"complement-table", "L | inf eq | ninf subseteq | ninf eq", "the dual condition",
                 [](const Automaton& a, const Condition& c) {
                   // Lprime and (ninf,meets) are not duals under complement:
                   // F ⊄ inf iff F meets ninf, on the same table.
                   if (c == cond::Lprime() || c == P(SK::kNinf, Rel::kMeets))
                     throw PreconditionError(
                         "complement-table does not preserve Lprime or ninf meets; those two "
                         "coincide on the unchanged table");
                   const std::vector<std::pair<Condition, Condition>> duals = {
                       {cond::L(), P(SK::kNinf, Rel::kSubseteq)},
                       {P(SK::kInf, Rel::kEq), P(SK::kNinf, Rel::kEq)}};
                   for (const auto& [x, y] : duals) {
                     if (c == x) return outcome(complement_table(a), y);
                     if (c == y) return outcome(complement_table(a), x);
                   }
                   throw PreconditionError("complement-table has no dual for " + c.to_string());
                 }});
    r.push_back({"add-sink", "run subseteq | run eq | inf * | L without ∅", "unchanged",
                 [](const Automaton& a, const Condition& c) { return outcome(add_sink(a, c), c); }});
    r.push_back(simple("inf-meets-to-L", P(SK::kInf, Rel::kMeets), cond::L(), inf_meets_to_L));
    r.push_back(simple("L-to-inf-meets", cond::L(), P(SK::kInf, Rel::kMeets),
                       [](const Automaton& a) { return L_to_inf_meets(a); }));
    r.push_back(simple("single-accepting-Lprime", cond::Lprime(), cond::Lprime(),
                       [](const Automaton& a) { return single_accepting_Lprime(a); }));
    r.push_back(simple("lprime-to-inf-subseteq", cond::Lprime(), P(SK::kInf, Rel::kSubseteq),
                       lprime_to_inf_subseteq));
    r.push_back({"complete-for-fin", "fin subseteq | fin eq", "unchanged",
                 [](const Automaton& a, const Condition& c) {
                   if (!(c == P(SK::kFin, Rel::kSubseteq)) && !(c == P(SK::kFin, Rel::kEq)))
                     throw PreconditionError("complete-for-fin reads fin subseteq or fin eq, got " +
                                             c.to_string());
                   return outcome(complete_for_fin(a), c);
                 }});
    r.push_back(simple("fin-subseteq-to-fin-eq", P(SK::kFin, Rel::kSubseteq), P(SK::kFin, Rel::kEq),
                       [](const Automaton& a) { return fin_subseteq_to_fin_eq(a); }));
    r.push_back(simple("fin-meets-to-fin-eq", P(SK::kFin, Rel::kMeets), P(SK::kFin, Rel::kEq),
                       [](const Automaton& a) { return fin_meets_to_fin_eq(a); }));
    r.push_back(simple("inf-meets-to-fin-eq", P(SK::kInf, Rel::kMeets), P(SK::kFin, Rel::kEq),
                       [](const Automaton& a) { return inf_meets_to_fin_eq(a); }));
    r.push_back({"dfa-fin-subseteq-decompose", "fin subseteq", "expression",
                 [](const Automaton& a, const Condition& c) {
                   require_source("dfa-fin-subseteq-decompose", c, P(SK::kFin, Rel::kSubseteq));
                   TransformOutcome o;
                   o.expr = dfa_fin_subseteq_decompose(a);
                   o.cond = c;
                   return o;
                 }});
    return r;
  }();
  return registry;
}

const TransformInfo* find_transform(std::string_view name) {
  for (const auto& t : transform_registry())
    if (t.name == name) return &t;
  return nullptr;
}

}  // namespace omega
