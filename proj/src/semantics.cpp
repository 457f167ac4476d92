// semantics.cpp -- product graph, summary oracle and direct membership

#include "omega/semantics.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "omega/error.hpp"
#include "omega/kernels.hpp"

namespace omega {

using Vertex = ProductGraph::Vertex;

ProductGraph::ProductGraph(const Automaton& a, const LassoWord& w)
    : num_states_(a.num_states()), length_(w.stem.size() + w.cycle.size()), initial_(0) {
  if (w.cycle.empty()) throw PreconditionError("lasso cycle must be nonempty");
  for (auto s : w.stem)
    if (s >= a.alphabet().size()) throw PreconditionError("word symbol outside the alphabet");
  for (auto s : w.cycle)
    if (s >= a.alphabet().size()) throw PreconditionError("word symbol outside the alphabet");

  const std::size_t n = size();
  initial_ = static_cast<Vertex>(a.initial() * length_);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (StateIndex q = 0; q < num_states_; ++q) {
    for (std::size_t pos = 0; pos < length_; ++pos) {
      const SymbolIndex x = pos < w.stem.size() ? w.stem[pos] : w.cycle[pos - w.stem.size()];
      const std::size_t next = pos + 1 < length_ ? pos + 1 : w.stem.size();
      for (StateIndex r : a.successors(q, x))
        edges.emplace_back(static_cast<Vertex>(q * length_ + pos),
                           static_cast<Vertex>(r * length_ + next));
    }
  }
  offsets_.assign(n + 1, 0);
  roffsets_.assign(n + 1, 0);
  for (auto [u, v] : edges) {
    ++offsets_[u + 1];
    ++roffsets_[v + 1];
  }
  for (std::size_t i = 1; i <= n; ++i) {
    offsets_[i] += offsets_[i - 1];
    roffsets_[i] += roffsets_[i - 1];
  }
  targets_.resize(edges.size());
  rtargets_.resize(edges.size());
  std::vector<std::uint32_t> fill(offsets_.begin(), offsets_.end() - 1);
  std::vector<std::uint32_t> rfill(roffsets_.begin(), roffsets_.end() - 1);
  for (auto [u, v] : edges) {
    targets_[fill[u]++] = v;
    rtargets_[rfill[v]++] = u;
  }
}

StateSet ProductGraph::lift(const StateSet& states) const {
  StateSet out(size());
  states.for_each([&](std::size_t q) {
    for (std::size_t pos = 0; pos < length_; ++pos) out.insert(q * length_ + pos);
  });
  return out;
}

StateSet ProductGraph::project(const StateSet& vertices) const {
  StateSet out(num_states_);
  vertices.for_each([&](std::size_t v) { out.insert(v / length_); });
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Graph queries restricted to a vertex mask.

// Strongly connected components of the subgraph induced by `mask` that
// contain at least one edge.
std::vector<StateSet> nontrivial_sccs(const ProductGraph& g, const StateSet& mask) {
  const std::size_t n = g.size();
  constexpr std::uint32_t kUnseen = UINT32_MAX;
  std::vector<std::uint32_t> index(n, kUnseen), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;
  std::vector<StateSet> out;
  std::uint32_t counter = 0;

  mask.for_each([&](std::size_t root) {
    if (index[root] != kUnseen) return;
    call.emplace_back(static_cast<Vertex>(root), 0);
    index[root] = low[root] = counter++;
    stack.push_back(static_cast<Vertex>(root));
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      auto succ = g.successors(v);
      if (edge < succ.size()) {
        Vertex w = succ[edge++];
        if (!mask.contains(w)) continue;
        if (index[w] == kUnseen) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const Vertex done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      if (low[done] != index[done]) continue;
      StateSet comp(n);
      std::size_t members = 0;
      Vertex w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp.insert(w);
        ++members;
      } while (w != done);
      bool nontrivial = members > 1;
      if (!nontrivial)
        for (Vertex s : g.successors(done)) nontrivial = nontrivial || s == done;
      if (nontrivial) out.push_back(std::move(comp));
    }
  });
  return out;
}

StateSet cyclic(const ProductGraph& g, const StateSet& mask) {
  StateSet out(g.size());
  for (const auto& c : nontrivial_sccs(g, mask)) out |= c;
  return out;
}

// Vertices reachable from the initial vertex in one or more steps, every
// stepped-on vertex lying in `mask`.
StateSet reach1(const ProductGraph& g, const StateSet& mask) {
  StateSet seen(g.size());
  std::vector<Vertex> todo;
  for (Vertex w : g.successors(g.initial()))
    if (mask.contains(w) && !seen.contains(w)) {
      seen.insert(w);
      todo.push_back(w);
    }
  while (!todo.empty()) {
    Vertex v = todo.back();
    todo.pop_back();
    for (Vertex w : g.successors(v))
      if (mask.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        todo.push_back(w);
      }
  }
  return seen;
}

StateSet reach0(const ProductGraph& g) {
  StateSet r = reach1(g, g.all());
  r.insert(g.initial());
  return r;
}

// Vertices of `mask` with a path inside `mask` to some vertex of `targets`.
StateSet backreach(const ProductGraph& g, const StateSet& mask, const StateSet& targets) {
  StateSet seen = targets & mask;
  std::vector<Vertex> todo;
  seen.for_each([&](std::size_t v) { todo.push_back(static_cast<Vertex>(v)); });
  while (!todo.empty()) {
    Vertex v = todo.back();
    todo.pop_back();
    for (Vertex w : g.predecessors(v))
      if (mask.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        todo.push_back(w);
      }
  }
  return seen;
}

StateSet live(const ProductGraph& g, const StateSet& mask) {
  return backreach(g, mask, cyclic(g, mask));
}

// Breadth-first search over (vertex, covered) where covered records which
// states of `must` were stepped on. Starts at the initial vertex with
// nothing covered and zero steps taken. `target(v, full, stepped)` decides
// success.
template <typename Target>
bool covering_search(const ProductGraph& g, const StateSet& mask, const StateSet& must,
                     std::size_t num_states, Target target) {
  std::vector<int> bit(num_states, -1);
  int width = 0;
  must.for_each([&](std::size_t q) { bit[q] = width++; });
  check_limit(static_cast<std::size_t>(width), 32, "covering search width |F|");
  const std::uint64_t full = width == 0 ? 0 : ((std::uint64_t{1} << width) - 1);

  auto key = [](Vertex v, std::uint64_t cov) { return (std::uint64_t{v} << 32) | cov; };
  std::unordered_set<std::uint64_t> seen;
  std::deque<std::pair<Vertex, std::uint64_t>> queue;
  if (target(g.initial(), full == 0, false)) return true;
  seen.insert(key(g.initial(), 0));
  queue.emplace_back(g.initial(), 0);
  while (!queue.empty()) {
    auto [v, cov] = queue.front();
    queue.pop_front();
    for (Vertex w : g.successors(v)) {
      if (!mask.contains(w)) continue;
      std::uint64_t next = cov;
      const int b = bit[g.state_of(w)];
      if (b >= 0) next |= std::uint64_t{1} << b;
      if (!seen.insert(key(w, next)).second) continue;
      if (target(w, next == full, true)) return true;
      check_limit(seen.size(), default_limits().oracle_pairs, "covering search pairs");
      queue.emplace_back(w, next);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Per-condition evaluation. Notation: S(X) = vertices whose state is in X.

bool eval_run(const ProductGraph& g, const Automaton& a, Rel rel) {
  const auto& table = a.table();
  const std::size_t nq = a.num_states();
  switch (rel) {
    case Rel::kMeets: {
      // Step on a state of some F, then continue forever.
      StateSet hit = reach1(g, g.all()) & g.lift(table.support()) & live(g, g.all());
      return !hit.empty();
    }
    case Rel::kSubseteq:
      for (const auto& f : table.sets()) {
        StateSet mask = g.lift(f);
        if (reach1(g, mask).intersects(cyclic(g, mask))) return true;
      }
      return false;
    case Rel::kEq:
      for (const auto& f : table.sets()) {
        if (f.empty()) continue;
        StateSet mask = g.lift(f);
        StateSet ok = live(g, mask);
        if (covering_search(g, mask, f, nq, [&](Vertex v, bool full, bool stepped) {
              return stepped && full && ok.contains(v);
            }))
          return true;
      }
      return false;
  }
  return false;
}

bool eval_inf(const ProductGraph& g, const Automaton& a, Rel rel, const AcceptanceTable& table) {
  const StateSet r0 = reach0(g);
  switch (rel) {
    case Rel::kMeets:
      return (cyclic(g, g.all()) & r0).intersects(g.lift(table.support()));
    case Rel::kSubseteq:
      for (const auto& f : table.sets())
        if (cyclic(g, g.lift(f)).intersects(r0)) return true;
      return false;
    case Rel::kEq:
      for (const auto& f : table.sets())
        for (const auto& d : nontrivial_sccs(g, g.lift(f)))
          if (g.project(d) == f && d.intersects(r0)) return true;
      return false;
  }
  (void)a;
  return false;
}

bool eval_L(const ProductGraph& g, const AcceptanceTable& table) {
  const StateSet r0 = reach0(g);
  for (const auto& d : nontrivial_sccs(g, g.all())) {
    if (!d.intersects(r0)) continue;
    const StateSet inf = g.project(d);
    if (kernels::any_row(kernels::RowTest::kRowSubsetQuery, table.packed(), inf.words().data()))
      return true;
  }
  return false;
}

bool eval_Lprime(const ProductGraph& g, const Automaton& a, const AcceptanceTable& table) {
  const StateSet r0 = reach0(g);
  const StateSet support = table.support();
  bool found = false;
  support.for_each([&](std::size_t s) {
    if (found) return;
    StateSet one(a.num_states());
    one.insert(s);
    found = cyclic(g, g.all() - g.lift(one)).intersects(r0);
  });
  return found;
}

bool eval_fin(const ProductGraph& g, const Automaton& a, Rel rel) {
  const auto& table = a.table();
  const std::size_t nq = a.num_states();
  const StateSet all = g.all();
  switch (rel) {
    case Rel::kMeets: {
      const StateSet r1 = reach1(g, all);
      bool found = false;
      table.support().for_each([&](std::size_t s) {
        if (found) return;
        StateSet one(nq);
        one.insert(s);
        const StateSet at_s = g.lift(one);
        const StateSet escape = backreach(g, all, cyclic(g, all - at_s));
        found = (r1 & at_s).intersects(escape);
      });
      return found;
    }
    case Rel::kSubseteq: {
      // Only SCCs of the whole graph matter: a larger loop raises inf.
      const auto comps = nontrivial_sccs(g, all);
      for (const auto& f : table.sets())
        for (const auto& d : comps) {
          if (d.contains(g.initial())) return true;
          if (reach1(g, g.lift(f | g.project(d))).intersects(d)) return true;
        }
      return false;
    }
    case Rel::kEq:
      for (const auto& f : table.sets()) {
        for (const auto& d : nontrivial_sccs(g, all - g.lift(f))) {
          const StateSet mask = g.lift(f | g.project(d));
          if (covering_search(g, mask, f, nq, [&](Vertex v, bool full, bool) {
                return full && d.contains(v);
              }))
            return true;
        }
      }
      return false;
  }
  return false;
}

bool eval_A(const ProductGraph& g, const Automaton& a) {
  const StateSet all = g.all();
  const StateSet ok = live(g, all);
  for (const auto& f : a.table().sets())
    if (covering_search(g, all, f, a.num_states(), [&](Vertex v, bool full, bool) {
          return full && ok.contains(v);
        }))
      return true;
  return false;
}

bool eval_Aprime(const ProductGraph& g, const Automaton& a) {
  bool found = false;
  a.table().support().for_each([&](std::size_t s) {
    if (found) return;
    StateSet one(a.num_states());
    one.insert(s);
    const StateSet mask = g.all() - g.lift(one);
    found = reach1(g, mask).intersects(cyclic(g, mask));
  });
  return found;
}

AcceptanceTable complemented(const Automaton& a) {
  std::vector<StateSet> sets;
  for (const auto& f : a.table().sets()) sets.push_back(f.complement());
  return AcceptanceTable(a.num_states(), sets);
}

// ---------------------------------------------------------------------------
// Summary oracle.

struct OracleNode {
  Vertex vertex;
  StateSet visited;
  std::uint32_t parent;
};

struct PairKey {
  Vertex v;
  StateSet visited;
  friend bool operator==(const PairKey&, const PairKey&) = default;
};
struct PairKeyHash {
  std::size_t operator()(const PairKey& k) const { return k.visited.hash() * 31 + k.v; }
};

std::vector<OracleNode> explore_pairs(const ProductGraph& g, std::size_t num_states,
                                      const Limits& limits) {
  std::vector<OracleNode> nodes;
  std::unordered_map<PairKey, std::uint32_t, PairKeyHash> index;
  nodes.push_back({g.initial(), StateSet(num_states), UINT32_MAX});
  index.emplace(PairKey{g.initial(), StateSet(num_states)}, 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Vertex v = nodes[i].vertex;
    for (Vertex w : g.successors(v)) {
      StateSet visited = nodes[i].visited;
      visited.insert(g.state_of(w));
      PairKey key{w, visited};
      if (index.contains(key)) continue;
      index.emplace(key, static_cast<std::uint32_t>(nodes.size()));
      nodes.push_back({w, std::move(visited), static_cast<std::uint32_t>(i)});
      check_limit(nodes.size(), limits.oracle_pairs, "oracle (vertex, visited-set) pairs");
    }
  }
  return nodes;
}

// Every strongly connected vertex set with an edge has the projection of one
// of the returned components: split a component by each of its states and
// recurse until the projection matches.
std::vector<StateSet> loop_components(const ProductGraph& g) {
  std::vector<StateSet> out;
  std::unordered_set<StateSet, StateSetHash> memo, recorded;
  std::vector<StateSet> todo{g.all()};
  while (!todo.empty()) {
    StateSet mask = std::move(todo.back());
    todo.pop_back();
    if (!memo.insert(mask).second) continue;
    for (auto& d : nontrivial_sccs(g, mask)) {
      const StateSet proj = g.project(d);
      proj.for_each([&](std::size_t s) {
        StateSet one(proj.universe());
        one.insert(s);
        todo.push_back(d - g.lift(one));
      });
      if (recorded.insert(d).second) out.push_back(std::move(d));
    }
  }
  return out;
}

// Shortest path of one or more steps inside `mask` from `from` to a vertex
// of `goal`; returns the vertices after `from`.
std::vector<Vertex> path_into(const ProductGraph& g, const StateSet& mask, Vertex from,
                              const StateSet& goal) {
  struct Link {
    Vertex parent;
    bool first_hop;
  };
  std::unordered_map<Vertex, Link> links;
  std::deque<Vertex> queue;
  for (Vertex w : g.successors(from)) {
    if (!mask.contains(w) || links.contains(w)) continue;
    links.emplace(w, Link{from, true});
    queue.push_back(w);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (goal.contains(v)) {
      std::vector<Vertex> path;
      for (Vertex c = v;; c = links.at(c).parent) {
        path.push_back(c);
        if (links.at(c).first_hop) break;
      }
      std::reverse(path.begin(), path.end());
      return path;
    }
    for (Vertex w : g.successors(v)) {
      if (!mask.contains(w) || links.contains(w)) continue;
      links.emplace(w, Link{v, false});
      queue.push_back(w);
    }
  }
  throw Error("internal: no path inside a strongly connected component");
}

// Closed walk from `start` through every vertex of the component `d`.
std::vector<Vertex> covering_cycle(const ProductGraph& g, const StateSet& d, Vertex start) {
  std::vector<Vertex> walk;
  StateSet covered(g.size());
  Vertex cur = start;
  while (true) {
    StateSet remaining = d - covered;
    if (remaining.empty()) {
      if (cur == start && !walk.empty()) break;
      remaining = StateSet(g.size());
      remaining.insert(start);
    }
    for (Vertex v : path_into(g, d, cur, remaining)) {
      walk.push_back(v);
      covered.insert(v);
      cur = v;
    }
  }
  return walk;
}

}  // namespace

// ---------------------------------------------------------------------------

StateSet stat_of(StatKind kind, const RunSummary& s, std::size_t num_states) {
  switch (kind) {
    case StatKind::kRun: return s.run;
    case StatKind::kInf: return s.inf;
    case StatKind::kFin: return s.run - s.inf;
    case StatKind::kNinf: return StateSet::full(num_states) - s.inf;
  }
  return s.run;
}

bool condition_holds(const Condition& cond, const RunSummary& s, const AcceptanceTable& table) {
  using kernels::RowTest;
  const auto rows = table.packed();
  if (!cond.is_pair()) {
    switch (cond.name()) {
      case NamedCondition::kA:
        return kernels::any_row(RowTest::kRowSubsetQuery, rows, s.run.words().data());
      case NamedCondition::kAprime:
        return kernels::any_row(RowTest::kRowNotSubsetQuery, rows, s.run.words().data());
      case NamedCondition::kL:
        return kernels::any_row(RowTest::kRowSubsetQuery, rows, s.inf.words().data());
      case NamedCondition::kLprime:
        return kernels::any_row(RowTest::kRowNotSubsetQuery, rows, s.inf.words().data());
    }
  }
  const StateSet stat = stat_of(cond.kind(), s, table.universe());
  switch (cond.rel()) {
    case Rel::kMeets: return kernels::any_row(RowTest::kMeets, rows, stat.words().data());
    case Rel::kSubseteq: return kernels::any_row(RowTest::kQuerySubsetRow, rows, stat.words().data());
    case Rel::kEq: return kernels::any_row(RowTest::kEqual, rows, stat.words().data());
  }
  return false;
}

std::vector<SummaryWitness> run_summaries_with_witnesses(const Automaton& a, const LassoWord& w,
                                                         const Limits& limits) {
  const ProductGraph g(a, w);
  const auto nodes = explore_pairs(g, a.num_states(), limits);
  const auto comps = loop_components(g);

  std::map<RunSummary, SummaryWitness> found;
  for (const auto& d : comps) {
    const StateSet inf = g.project(d);
    for (std::uint32_t i = 0; i < nodes.size(); ++i) {
      if (!d.contains(nodes[i].vertex)) continue;
      RunSummary s{nodes[i].visited | inf, inf};
      if (found.contains(s)) continue;
      LassoPath path;
      for (std::uint32_t j = i; j != UINT32_MAX; j = nodes[j].parent)
        path.prefix.push_back(g.state_of(nodes[j].vertex));
      std::reverse(path.prefix.begin(), path.prefix.end());
      for (Vertex v : covering_cycle(g, d, nodes[i].vertex)) path.cycle.push_back(g.state_of(v));
      found.emplace(s, SummaryWitness{s, std::move(path)});
    }
  }
  std::vector<SummaryWitness> out;
  for (auto& [s, wit] : found) out.push_back(std::move(wit));
  return out;
}

std::vector<RunSummary> run_summaries(const Automaton& a, const LassoWord& w,
                                      const Limits& limits) {
  const ProductGraph g(a, w);
  const auto nodes = explore_pairs(g, a.num_states(), limits);
  std::set<RunSummary> found;
  for (const auto& d : loop_components(g)) {
    const StateSet inf = g.project(d);
    for (const auto& node : nodes)
      if (d.contains(node.vertex)) found.insert({node.visited | inf, inf});
  }
  return {found.begin(), found.end()};
}

bool accepts_by_summaries(const Automaton& a, const Condition& cond, const LassoWord& w,
                          const Limits& limits) {
  for (const auto& s : run_summaries(a, w, limits))
    if (condition_holds(cond, s, a.table())) return true;
  return false;
}

bool accepts(const Automaton& a, const Condition& cond, const LassoWord& w) {
  const ProductGraph g(a, w);
  if (!cond.is_pair()) {
    switch (cond.name()) {
      case NamedCondition::kA: return eval_A(g, a);
      case NamedCondition::kAprime: return eval_Aprime(g, a);
      case NamedCondition::kL: return eval_L(g, a.table());
      case NamedCondition::kLprime: return eval_Lprime(g, a, a.table());
    }
  }
  switch (cond.kind()) {
    case StatKind::kRun: return eval_run(g, a, cond.rel());
    case StatKind::kInf: return eval_inf(g, a, cond.rel(), a.table());
    case StatKind::kFin: return eval_fin(g, a, cond.rel());
    case StatKind::kNinf:
      switch (cond.rel()) {
        case Rel::kMeets: return eval_Lprime(g, a, a.table());
        case Rel::kSubseteq: return eval_L(g, complemented(a));
        case Rel::kEq: return eval_inf(g, a, Rel::kEq, complemented(a));
      }
  }
  return false;
}

}  // namespace omega
