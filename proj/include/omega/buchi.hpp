// buchi.hpp -- translation of every condition to Büchi acceptance, emptiness
// and bounded equivalence
//
// condition_to_muller tracks the visited set: along any infinite path of the
// product (q, V) the V component is eventually constant and equal to run(p),
// so the product's inf-set is {(q, V) : q ∈ inf(p)} for that final V. Muller
// sets are therefore only listed for such coherent (V, I) pairs, I ⊆ V, which
// are the only inf-sets the product can realize.

#pragma once

#include <optional>

#include "omega/condition.hpp"
#include "omega/core.hpp"
#include "omega/limits.hpp"
#include "omega/words.hpp"

namespace omega {

/// Visited-set product whose table is a Muller table (read under (inf, eq))
/// accepting exactly a's language under cond.
Automaton condition_to_muller(const Automaton& a, const Condition& cond,
                              const Limits& limits = default_limits());

/// Breakpoint construction: `m`'s table is read as a Muller table; the result
/// is read under (inf, meets) and has exactly one table set.
Automaton muller_to_buchi(const Automaton& m, const Limits& limits = default_limits());

Automaton to_buchi(const Automaton& a, const Condition& cond,
                   const Limits& limits = default_limits());

struct EmptinessReport {
  bool empty = true;
  std::optional<LassoWord> witness;
};

/// For Büchi-form input (a table of at most one set, read under (inf, meets)).
EmptinessReport is_empty(const Automaton& a);

struct EquivResult {
  bool equal = true;
  LassoWord word;  // first disagreement when !equal
  bool in1 = false;
  bool in2 = false;
};

EquivResult bounded_equiv(const Automaton& a1, const Condition& c1, const Automaton& a2,
                          const Condition& c2, std::size_t stem_max, std::size_t cycle_max);

}  // namespace omega
