// core.cpp -- automaton data model

#include "omega/core.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

#include "omega/error.hpp"

namespace omega {

bool is_valid_token(std::string_view token) {
  if (token.empty()) return false;
  for (char c : token) {
    if (std::isspace(static_cast<unsigned char>(c)) != 0) return false;
    if (c == '{' || c == '}' || c == ':' || c == '#') return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw ValidationError("alphabet is empty");
  for (SymbolIndex i = 0; i < symbols_.size(); ++i) {
    if (!is_valid_token(symbols_[i]))
      throw ValidationError("invalid symbol token '" + symbols_[i] + "'");
    if (!index_.emplace(symbols_[i], i).second)
      throw ValidationError("duplicate symbol '" + symbols_[i] + "'");
  }
}

std::optional<SymbolIndex> Alphabet::find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Alphabet::single_character() const {
  return std::all_of(symbols_.begin(), symbols_.end(),
                     [](const std::string& s) { return s.size() == 1; });
}

// ---------------------------------------------------------------------------
// AcceptanceTable

AcceptanceTable::AcceptanceTable(std::size_t universe, const std::vector<StateSet>& sets)
    : universe_(universe) {
  std::vector<StateSet> sorted;
  sorted.reserve(sets.size());
  for (const auto& s : sets) {
    if (s.universe() != universe)
      throw ValidationError("table set over a universe of " + std::to_string(s.universe()) +
                            " states, expected " + std::to_string(universe));
    sorted.push_back(s);
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  rows_ = sorted.size();
  for (const auto& s : sorted) words_.insert(words_.end(), s.words().begin(), s.words().end());
}

StateSet AcceptanceTable::set(std::size_t i) const {
  StateSet s(universe_);
  const std::size_t width = StateSet::words_for(universe_);
  std::copy_n(words_.begin() + static_cast<std::ptrdiff_t>(i * width), width, s.words().begin());
  return s;
}

std::vector<StateSet> AcceptanceTable::sets() const {
  std::vector<StateSet> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(set(i));
  return out;
}

bool AcceptanceTable::contains(const StateSet& s) const {
  return kernels::any_row(kernels::RowTest::kEqual, packed(), s.words().data());
}

StateSet AcceptanceTable::support() const {
  StateSet u(universe_);
  for (std::size_t i = 0; i < rows_; ++i) u |= set(i);
  return u;
}

// ---------------------------------------------------------------------------
// Validation

std::vector<Violation> validate(const RawAutomaton& raw) {
  std::vector<Violation> out;
  auto add = [&](std::string what, std::string element) {
    out.push_back({std::move(what), std::move(element)});
  };

  std::set<std::string> symbols;
  if (raw.alphabet.empty()) add("alphabet is empty", "");
  for (const auto& s : raw.alphabet) {
    if (!is_valid_token(s)) add("invalid symbol token", s);
    if (!symbols.insert(s).second) add("duplicate symbol", s);
  }

  std::set<std::string> states;
  if (raw.states.empty()) add("no states", "");
  for (const auto& q : raw.states) {
    if (!is_valid_token(q)) add("invalid state token", q);
    if (!states.insert(q).second) add("duplicate state", q);
  }

  if (!states.contains(raw.initial)) add("initial not in states", raw.initial);

  std::set<std::tuple<std::string, std::string, std::string>> edges;
  for (const auto& e : raw.transitions) {
    std::string shown = e.src + " " + e.sym + " " + e.dst;
    if (!states.contains(e.src)) add("transition source not in states", shown);
    if (!symbols.contains(e.sym)) add("transition symbol not in alphabet", shown);
    if (!states.contains(e.dst)) add("transition target not in states", shown);
    if (!edges.emplace(e.src, e.sym, e.dst).second) add("duplicate transition", shown);
  }

  std::set<std::set<std::string>> seen_sets;
  for (const auto& member : raw.table) {
    std::string shown = "{";
    for (std::size_t i = 0; i < member.size(); ++i) shown += (i ? " " : "") + member[i];
    shown += "}";
    std::set<std::string> as_set;
    bool inside = true;
    for (const auto& q : member) {
      if (!states.contains(q)) inside = false;
      if (!as_set.insert(q).second) add("duplicate state in table set", shown);
    }
    if (!inside) add("table set not ⊆ Q", shown);
    if (!seen_sets.insert(as_set).second) add("duplicate table set", shown);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Automaton

Automaton Automaton::from_raw(const RawAutomaton& raw) {
  auto violations = validate(raw);
  if (!violations.empty()) {
    std::string msg = "invalid automaton:";
    for (const auto& v : violations)
      msg += " " + v.what + (v.element.empty() ? "" : " (" + v.element + ")") + ";";
    msg.pop_back();
    throw ValidationError(msg);
  }
  Alphabet alphabet(raw.alphabet);
  std::unordered_map<std::string, StateIndex> idx;
  for (StateIndex i = 0; i < raw.states.size(); ++i) idx.emplace(raw.states[i], i);
  std::vector<Transition> ts;
  ts.reserve(raw.transitions.size());
  for (const auto& e : raw.transitions)
    ts.push_back({idx.at(e.src), *alphabet.find(e.sym), idx.at(e.dst)});
  std::vector<StateSet> sets;
  for (const auto& member : raw.table) {
    StateSet s(raw.states.size());
    for (const auto& q : member) s.insert(idx.at(q));
    sets.push_back(std::move(s));
  }
  return Automaton(std::move(alphabet), raw.states, std::move(ts), idx.at(raw.initial),
                   AcceptanceTable(raw.states.size(), sets));
}

Automaton::Automaton(Alphabet alphabet, std::vector<std::string> state_names,
                     std::vector<Transition> transitions, StateIndex initial,
                     AcceptanceTable table)
    : alphabet_(std::move(alphabet)),
      names_(std::move(state_names)),
      transitions_(std::move(transitions)),
      initial_(initial),
      table_(std::move(table)) {
  if (alphabet_.size() == 0) throw ValidationError("alphabet is empty");
  if (names_.empty()) throw ValidationError("no states");
  for (StateIndex i = 0; i < names_.size(); ++i) {
    if (!is_valid_token(names_[i]))
      throw ValidationError("invalid state token '" + names_[i] + "'");
    if (!by_name_.emplace(names_[i], i).second)
      throw ValidationError("duplicate state '" + names_[i] + "'");
  }
  if (initial_ >= names_.size()) throw ValidationError("initial not in states");
  if (table_.universe() != names_.size())
    throw ValidationError("table set not ⊆ Q (table universe " +
                          std::to_string(table_.universe()) + ", " +
                          std::to_string(names_.size()) + " states)");
  for (const auto& t : transitions_) {
    if (t.src >= names_.size() || t.dst >= names_.size())
      throw ValidationError("transition endpoint not in states");
    if (t.sym >= alphabet_.size()) throw ValidationError("transition symbol not in alphabet");
  }
  std::sort(transitions_.begin(), transitions_.end());
  transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());

  const std::size_t k = alphabet_.size();
  offsets_.assign(names_.size() * k + 1, 0);
  for (const auto& t : transitions_) ++offsets_[t.src * k + t.sym + 1];
  for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
  targets_.reserve(transitions_.size());
  for (const auto& t : transitions_) targets_.push_back(t.dst);
}

std::optional<StateIndex> Automaton::find_state(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::span<const StateIndex> Automaton::successors(StateIndex q, SymbolIndex a) const {
  const std::size_t slot = q * alphabet_.size() + a;
  return {targets_.data() + offsets_[slot], targets_.data() + offsets_[slot + 1]};
}

Automaton Automaton::with_table(AcceptanceTable table) const {
  return Automaton(alphabet_, names_, transitions_, initial_, std::move(table));
}

RawAutomaton Automaton::to_raw() const {
  RawAutomaton raw;
  raw.alphabet = alphabet_.symbols();
  raw.states = names_;
  for (const auto& t : transitions_)
    raw.transitions.push_back({names_[t.src], alphabet_.symbol(t.sym), names_[t.dst]});
  raw.initial = names_[initial_];
  for (const auto& s : table_.sets()) {
    std::vector<std::string> member;
    s.for_each([&](std::size_t q) { member.push_back(names_[q]); });
    raw.table.push_back(std::move(member));
  }
  return raw;
}

StateSet Automaton::make_set(std::initializer_list<std::string_view> names) const {
  StateSet s(num_states());
  for (auto n : names) {
    auto q = find_state(n);
    if (!q) throw ValidationError("unknown state '" + std::string(n) + "'");
    s.insert(*q);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Predicates

bool is_deterministic(const Automaton& a) {
  for (StateIndex q = 0; q < a.num_states(); ++q)
    for (SymbolIndex x = 0; x < a.alphabet().size(); ++x)
      if (a.successors(q, x).size() > 1) return false;
  return true;
}

bool is_complete(const Automaton& a) {
  for (StateIndex q = 0; q < a.num_states(); ++q)
    for (SymbolIndex x = 0; x < a.alphabet().size(); ++x)
      if (a.successors(q, x).empty()) return false;
  return true;
}

StateSet reachable_states(const Automaton& a) {
  StateSet seen(a.num_states());
  std::deque<StateIndex> queue{a.initial()};
  seen.insert(a.initial());
  while (!queue.empty()) {
    StateIndex q = queue.front();
    queue.pop_front();
    for (SymbolIndex x = 0; x < a.alphabet().size(); ++x)
      for (StateIndex r : a.successors(q, x))
        if (!seen.contains(r)) {
          seen.insert(r);
          queue.push_back(r);
        }
  }
  return seen;
}

namespace {

enum class TrimMode { kRemoveFromSets, kRemoveDropEmptied, kDropTouching, kNinfRestrict, kSentinel };

TrimMode trim_mode(const Condition& cond) {
  if (!cond.is_pair()) {
    switch (cond.name()) {
      case NamedCondition::kA:
      case NamedCondition::kL:
        return TrimMode::kDropTouching;
      case NamedCondition::kAprime:
      case NamedCondition::kLprime:
        return TrimMode::kSentinel;
    }
  }
  if (cond.kind() == StatKind::kNinf)
    return cond.rel() == Rel::kMeets ? TrimMode::kSentinel : TrimMode::kNinfRestrict;
  switch (cond.rel()) {
    case Rel::kMeets: return TrimMode::kRemoveDropEmptied;
    case Rel::kSubseteq: return TrimMode::kRemoveFromSets;
    case Rel::kEq: return TrimMode::kDropTouching;
  }
  return TrimMode::kRemoveFromSets;
}

}  // namespace

Automaton trim_unreachable(const Automaton& a, const Condition& cond) {
  const StateSet reach = reachable_states(a);
  const StateSet unreachable = reach.complement();
  if (unreachable.empty()) return a;

  const TrimMode mode = trim_mode(cond);
  StateSet keep = reach;
  std::optional<StateIndex> sentinel;
  if (mode == TrimMode::kSentinel) {
    const StateSet touched = a.table().support() & unreachable;
    touched.for_each([&](std::size_t q) {
      if (!sentinel || a.state_name(static_cast<StateIndex>(q)) < a.state_name(*sentinel))
        sentinel = static_cast<StateIndex>(q);
    });
    if (sentinel) keep.insert(*sentinel);
  }

  std::vector<StateIndex> remap(a.num_states(), 0);
  std::vector<std::string> names;
  keep.for_each([&](std::size_t q) {
    remap[q] = static_cast<StateIndex>(names.size());
    names.push_back(a.state_name(static_cast<StateIndex>(q)));
  });
  auto project = [&](const StateSet& s) {
    StateSet out(names.size());
    (s & keep).for_each([&](std::size_t q) { out.insert(remap[q]); });
    return out;
  };

  std::vector<StateSet> sets;
  for (const auto& f : a.table().sets()) {
    const bool touches = f.intersects(unreachable);
    switch (mode) {
      case TrimMode::kRemoveFromSets:
        sets.push_back(project(f & reach));
        break;
      case TrimMode::kRemoveDropEmptied:
        if (!(touches && (f & reach).empty())) sets.push_back(project(f & reach));
        break;
      case TrimMode::kDropTouching:
        if (!touches) sets.push_back(project(f));
        break;
      case TrimMode::kNinfRestrict:
        // Unreachable states are in every ninf, so only sets holding all of them survive.
        if (unreachable.subset_of(f)) sets.push_back(project(f & reach));
        break;
      case TrimMode::kSentinel:
        if (touches) {
          StateSet only(names.size());
          only.insert(remap[*sentinel]);
          sets.push_back(std::move(only));
        } else {
          sets.push_back(project(f));
        }
        break;
    }
  }

  std::vector<Transition> ts;
  for (const auto& t : a.transitions())
    if (reach.contains(t.src) && reach.contains(t.dst))
      ts.push_back({remap[t.src], t.sym, remap[t.dst]});
  if (sentinel)
    for (SymbolIndex x = 0; x < a.alphabet().size(); ++x)
      ts.push_back({remap[*sentinel], x, remap[*sentinel]});

  return Automaton(a.alphabet(), std::move(names), std::move(ts), remap[a.initial()],
                   AcceptanceTable(keep.count(), sets));
}

std::string format_set(const Automaton& a, const StateSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t q) {
    if (!first) out += ' ';
    out += a.state_name(static_cast<StateIndex>(q));
    first = false;
  });
  return out + "}";
}

}  // namespace omega
