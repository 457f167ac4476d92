// core.hpp -- automaton data model, validation and structural predicates
//
// An automaton is (Σ, Q, T, q₀, 𝓕): an ordered alphabet, an ordered list of
// named states, a transition relation, one initial state and an acceptance
// table (a set of state sets). Names are tokens: nonempty, no whitespace and
// none of '{', '}', ':', '#'. Internally states and symbols are indices in
// declaration order; all values are immutable once built.

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "omega/bitset.hpp"
#include "omega/condition.hpp"
#include "omega/kernels.hpp"

namespace omega {

using StateIndex = std::uint32_t;
using SymbolIndex = std::uint32_t;

/// True if `token` is usable as a symbol or state name.
bool is_valid_token(std::string_view token);

class Alphabet {
 public:
  Alphabet() = default;
  /// Throws ValidationError on an empty list, duplicates or bad tokens.
  explicit Alphabet(std::vector<std::string> symbols);

  std::size_t size() const { return symbols_.size(); }
  const std::string& symbol(SymbolIndex i) const { return symbols_[i]; }
  const std::vector<std::string>& symbols() const { return symbols_; }
  std::optional<SymbolIndex> find(std::string_view token) const;
  /// True when every symbol is one character, so words can be written unseparated.
  bool single_character() const;

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols_ == b.symbols_; }

 private:
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, SymbolIndex> index_;
};

struct Transition {
  StateIndex src = 0;
  SymbolIndex sym = 0;
  StateIndex dst = 0;
  friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// A set of member sets over a universe of `universe()` states, stored as
/// packed bitset rows, sorted and free of duplicates.
class AcceptanceTable {
 public:
  AcceptanceTable() = default;
  explicit AcceptanceTable(std::size_t universe) : universe_(universe) {}
  AcceptanceTable(std::size_t universe, const std::vector<StateSet>& sets);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return rows_; }
  bool empty() const { return rows_ == 0; }
  StateSet set(std::size_t i) const;
  std::vector<StateSet> sets() const;
  bool contains(const StateSet& s) const;
  /// Union of all member sets.
  StateSet support() const;

  kernels::PackedRows packed() const {
    return {words_.data(), rows_, StateSet::words_for(universe_)};
  }

  friend bool operator==(const AcceptanceTable&, const AcceptanceTable&) = default;

 private:
  std::size_t universe_ = 0;
  std::size_t rows_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Automaton data as written by a user, before any checking.
struct RawAutomaton {
  std::vector<std::string> alphabet;
  std::vector<std::string> states;
  struct Edge {
    std::string src, sym, dst;
  };
  std::vector<Edge> transitions;
  std::string initial;
  std::vector<std::vector<std::string>> table;
};

struct Violation {
  std::string what;     // e.g. "initial not in states"
  std::string element;  // the offending element, rendered as text
  friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every violated invariant of `raw`; empty means valid.
std::vector<Violation> validate(const RawAutomaton& raw);

class Automaton {
 public:
  /// Throws ValidationError listing every violation.
  static Automaton from_raw(const RawAutomaton& raw);

  /// Index-level constructor used by constructions. Transitions may arrive in
  /// any order and with duplicates. Throws ValidationError on out-of-range
  /// indices, bad or duplicate names, or a table over the wrong universe.
  Automaton(Alphabet alphabet, std::vector<std::string> state_names,
            std::vector<Transition> transitions, StateIndex initial, AcceptanceTable table);

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t num_states() const { return names_.size(); }
  const std::string& state_name(StateIndex q) const { return names_[q]; }
  const std::vector<std::string>& state_names() const { return names_; }
  std::optional<StateIndex> find_state(std::string_view name) const;
  const std::vector<Transition>& transitions() const { return transitions_; }
  std::span<const StateIndex> successors(StateIndex q, SymbolIndex a) const;
  StateIndex initial() const { return initial_; }
  const AcceptanceTable& table() const { return table_; }

  Automaton with_table(AcceptanceTable table) const;
  RawAutomaton to_raw() const;

  StateSet make_set(std::initializer_list<std::string_view> names) const;
  StateSet all_states() const { return StateSet::full(num_states()); }

  friend bool operator==(const Automaton& a, const Automaton& b) {
    return a.alphabet_ == b.alphabet_ && a.names_ == b.names_ &&
           a.transitions_ == b.transitions_ && a.initial_ == b.initial_ && a.table_ == b.table_;
  }

 private:
  Alphabet alphabet_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, StateIndex> by_name_;
  std::vector<Transition> transitions_;  // sorted by (src, sym, dst)
  std::vector<std::uint32_t> offsets_;   // CSR over (src, sym)
  std::vector<StateIndex> targets_;
  StateIndex initial_ = 0;
  AcceptanceTable table_;
};

bool is_deterministic(const Automaton& a);
bool is_complete(const Automaton& a);

/// States reachable from the initial state (the initial state included).
StateSet reachable_states(const Automaton& a);

/// Restricts `a` to its reachable states and rewrites the table so the
/// language under `cond` is unchanged. For conditions where an unreachable
/// state in a member set makes that set always satisfied ((ninf, meets), A',
/// L'), one unreachable sentinel state is kept instead of rewriting.
Automaton trim_unreachable(const Automaton& a, const Condition& cond);

/// Renders a set of `a`'s states as "{q0 q1}" in declaration order.
std::string format_set(const Automaton& a, const StateSet& s);

}  // namespace omega
