// semantics.hpp -- membership of lasso words
//
// Everything here works on the product of an automaton with a lasso word:
// vertex (q, pos) for pos in [0, |u|+|v|), where pos indexes the stem and then
// the cycle, and the position after the last one wraps to |u|. An initial
// path of the automaton labelled by the word is exactly a path of this graph
// from (q₀, 0).
//
// Two evaluators are provided. run_summaries() enumerates every realizable
// (run, inf) pair and is the reference. accepts() decides each condition with
// reachability and SCC queries on the product, which stays polynomial in the
// graph size except for covering searches bounded by 2^|F|.

#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "omega/bitset.hpp"
#include "omega/condition.hpp"
#include "omega/core.hpp"
#include "omega/limits.hpp"
#include "omega/words.hpp"

namespace omega {

struct RunSummary {
  StateSet run;
  StateSet inf;
  friend bool operator==(const RunSummary&, const RunSummary&) = default;
  friend bool operator<(const RunSummary& a, const RunSummary& b) {
    if (a.run == b.run) return a.inf < b.inf;
    return a.run < b.run;
  }
};

/// A lasso-shaped path: prefix p₀ … p_k with p₀ the initial state, followed
/// by the cycle c₁ … c_m repeated forever (c_m = p_k).
struct LassoPath {
  std::vector<StateIndex> prefix;
  std::vector<StateIndex> cycle;
};

struct SummaryWitness {
  RunSummary summary;
  LassoPath path;
};

class ProductGraph {
 public:
  using Vertex = std::uint32_t;

  ProductGraph(const Automaton& a, const LassoWord& w);

  std::size_t size() const { return num_states_ * length_; }
  std::size_t length() const { return length_; }
  Vertex initial() const { return initial_; }
  StateIndex state_of(Vertex v) const { return static_cast<StateIndex>(v / length_); }
  std::size_t position_of(Vertex v) const { return v % length_; }
  std::span<const Vertex> successors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::span<const Vertex> predecessors(Vertex v) const {
    return {rtargets_.data() + roffsets_[v], rtargets_.data() + roffsets_[v + 1]};
  }
  /// Vertices whose automaton state is in `states`.
  StateSet lift(const StateSet& states) const;
  StateSet all() const { return StateSet::full(size()); }
  /// Automaton states of the given vertices.
  StateSet project(const StateSet& vertices) const;

 private:
  std::size_t num_states_;
  std::size_t length_;
  Vertex initial_;
  std::vector<std::uint32_t> offsets_, roffsets_;
  std::vector<Vertex> targets_, rtargets_;
};

/// Every (run(p), inf(p)) over initial infinite paths p labelled by w, sorted
/// and without duplicates. Throws PreconditionError if w uses a symbol
/// outside the alphabet and SizeGuardError past limits.oracle_pairs.
std::vector<RunSummary> run_summaries(const Automaton& a, const LassoWord& w,
                                      const Limits& limits = default_limits());

/// As run_summaries, with one concrete path per summary.
std::vector<SummaryWitness> run_summaries_with_witnesses(const Automaton& a, const LassoWord& w,
                                                         const Limits& limits = default_limits());

StateSet stat_of(StatKind kind, const RunSummary& s, std::size_t num_states);

bool condition_holds(const Condition& cond, const RunSummary& s, const AcceptanceTable& table);

/// Membership by direct evaluation on the product graph.
bool accepts(const Automaton& a, const Condition& cond, const LassoWord& w);

/// Membership by enumerating run_summaries.
bool accepts_by_summaries(const Automaton& a, const Condition& cond, const LassoWord& w,
                          const Limits& limits = default_limits());

}  // namespace omega
