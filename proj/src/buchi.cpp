// buchi.cpp

#include "omega/buchi.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "omega/error.hpp"
#include "omega/semantics.hpp"

namespace omega {

namespace {

using Mask = std::uint64_t;

std::string mask_name(const Automaton& a, Mask m) {
  std::string out = "[";
  bool first = true;
  for (std::size_t q = 0; q < a.num_states(); ++q) {
    if (((m >> q) & 1U) == 0) continue;
    if (!first) out += ',';
    out += a.state_name(static_cast<StateIndex>(q));
    first = false;
  }
  return out + "]";
}

}  // namespace

Automaton condition_to_muller(const Automaton& a, const Condition& cond, const Limits& limits) {
  const std::size_t n = a.num_states();
  check_limit(n, limits.powerset_states, "|Q| for the visited-set product");
  check_limit(n, 63, "|Q| for a subset construction");

  std::vector<std::pair<StateIndex, Mask>> keys;
  std::map<std::pair<StateIndex, Mask>, StateIndex> index;
  std::vector<Transition> ts;
  auto intern = [&](StateIndex q, Mask v) {
    auto [it, fresh] = index.emplace(std::make_pair(q, v), static_cast<StateIndex>(keys.size()));
    if (fresh) {
      keys.emplace_back(q, v);
      check_limit(keys.size(), limits.constructed_states, "constructed state count");
    }
    return it->second;
  };
  intern(a.initial(), 0);
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto [p, v] = keys[i];
    for (SymbolIndex x = 0; x < a.alphabet().size(); ++x)
      for (StateIndex q : a.successors(p, x))
        ts.push_back({static_cast<StateIndex>(i), x, intern(q, v | (Mask{1} << q))});
  }

  // Muller sets for coherent (V, I): every (q, V) with q ∈ I must exist.
  std::map<Mask, std::vector<std::pair<StateIndex, StateIndex>>> by_visited;  // V -> (q, idx)
  for (StateIndex i = 0; i < keys.size(); ++i) by_visited[keys[i].second].emplace_back(keys[i].first, i);
  std::vector<StateSet> sets;
  for (const auto& [v, members] : by_visited) {
    Mask present = 0;
    for (auto [q, idx] : members) present |= Mask{1} << q;
    // Nonempty I ⊆ present (states of V without a product copy cannot be in inf).
    for (Mask inf = present; inf != 0; inf = (inf - 1) & present) {
      RunSummary s{StateSet(n), StateSet(n)};
      for (std::size_t q = 0; q < n; ++q) {
        if (((v >> q) & 1U) != 0) s.run.insert(q);
        if (((inf >> q) & 1U) != 0) s.inf.insert(q);
      }
      if (!s.inf.subset_of(s.run)) continue;
      if (!condition_holds(cond, s, a.table())) continue;
      StateSet m(keys.size());
      for (auto [q, idx] : members)
        if (((inf >> q) & 1U) != 0) m.insert(idx);
      sets.push_back(std::move(m));
      check_limit(sets.size(), limits.constructed_states, "Muller table size");
    }
  }

  std::vector<std::string> names;
  for (const auto& [q, v] : keys) names.push_back(a.state_name(q) + "·" + mask_name(a, v));
  return Automaton(a.alphabet(), std::move(names), std::move(ts), 0,
                   AcceptanceTable(keys.size(), sets));
}

Automaton muller_to_buchi(const Automaton& m, const Limits& limits) {
  const auto table = m.table().sets();
  const std::size_t n = m.num_states();

  // State ids: 0..n-1 copy Q; further states are (q, M index, K).
  struct Key {
    StateIndex q;
    std::uint32_t set;
    StateSet k;
  };
  std::vector<Key> keys;
  std::unordered_map<std::string, StateIndex> index;
  std::vector<std::string> names = m.state_names();
  std::vector<Transition> ts = m.transitions();
  std::vector<std::uint32_t> todo;

  auto key_text = [&](StateIndex q, std::uint32_t set, const StateSet& k) {
    std::string s = m.state_name(q) + "·m" + std::to_string(set) + "·[";
    bool first = true;
    k.for_each([&](std::size_t r) {
      if (!first) s += ',';
      s += m.state_name(static_cast<StateIndex>(r));
      first = false;
    });
    return s + "]";
  };
  auto intern = [&](StateIndex q, std::uint32_t set, StateSet k) {
    std::string name = key_text(q, set, k);
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    const auto id = static_cast<StateIndex>(n + keys.size());
    index.emplace(name, id);
    names.push_back(std::move(name));
    keys.push_back({q, set, std::move(k)});
    todo.push_back(static_cast<std::uint32_t>(keys.size() - 1));
    check_limit(names.size(), limits.constructed_states, "constructed state count");
    return id;
  };
  auto single = [&](StateIndex q) {
    StateSet s(n);
    s.insert(q);
    return s;
  };

  // Reachable part of Q, then the jumps into each M.
  const StateSet reach = reachable_states(m);
  for (const auto& t : m.transitions()) {
    if (!reach.contains(t.src)) continue;
    for (std::uint32_t i = 0; i < table.size(); ++i)
      if (table[i].contains(t.dst)) ts.push_back({t.src, t.sym, intern(t.dst, i, single(t.dst))});
  }
  while (!todo.empty()) {
    const std::uint32_t at = todo.back();
    todo.pop_back();
    const Key key = keys[at];
    const auto id = static_cast<StateIndex>(n + at);
    const StateSet& mset = table[key.set];
    const bool full = key.k == mset;
    for (SymbolIndex x = 0; x < m.alphabet().size(); ++x)
      for (StateIndex q : m.successors(key.q, x)) {
        if (!mset.contains(q)) continue;
        StateSet next = full ? single(q) : key.k;
        next.insert(q);
        ts.push_back({id, x, intern(q, key.set, std::move(next))});
      }
  }

  StateSet accepting(names.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    if (keys[i].k == table[keys[i].set]) accepting.insert(n + i);
  return Automaton(m.alphabet(), std::move(names), std::move(ts), m.initial(),
                   AcceptanceTable(accepting.universe(), {accepting}));
}

Automaton to_buchi(const Automaton& a, const Condition& cond, const Limits& limits) {
  return trim_unreachable(muller_to_buchi(condition_to_muller(a, cond, limits), limits),
                          cond::buchi());
}

EmptinessReport is_empty(const Automaton& a) {
  if (a.table().size() > 1)
    throw PreconditionError("emptiness check needs a Büchi table of at most one set");
  EmptinessReport report;
  if (a.table().empty() || a.table().set(0).empty()) return report;
  const StateSet accepting = a.table().set(0);
  const std::size_t n = a.num_states();
  const std::size_t k = a.alphabet().size();

  // Shortest labelled paths from a source; parent links give (state, symbol).
  struct Link {
    StateIndex from;
    SymbolIndex sym;
  };
  auto bfs = [&](StateIndex src, bool include_src) {
    std::vector<int> dist(n, -1);
    std::vector<Link> link(n);
    std::deque<StateIndex> queue;
    if (include_src) {
      dist[src] = 0;
      queue.push_back(src);
    } else {
      for (SymbolIndex x = 0; x < k; ++x)
        for (StateIndex r : a.successors(src, x))
          if (dist[r] < 0) {
            dist[r] = 1;
            link[r] = {src, x};
            queue.push_back(r);
          }
    }
    while (!queue.empty()) {
      StateIndex q = queue.front();
      queue.pop_front();
      for (SymbolIndex x = 0; x < k; ++x)
        for (StateIndex r : a.successors(q, x))
          if (dist[r] < 0) {
            dist[r] = dist[q] + 1;
            link[r] = {q, x};
            queue.push_back(r);
          }
    }
    return std::make_pair(dist, link);
  };
  auto labels = [&](const std::vector<Link>& link, StateIndex src, StateIndex dst,
                    std::size_t steps) {
    std::vector<SymbolIndex> out;
    StateIndex at = dst;
    for (std::size_t i = 0; i < steps; ++i) {
      out.push_back(link[at].sym);
      at = link[at].from;
    }
    (void)src;
    std::reverse(out.begin(), out.end());
    return out;
  };

  const auto [dist0, link0] = bfs(a.initial(), true);
  std::optional<StateIndex> best;
  std::vector<int> back;
  std::vector<Link> back_link;
  accepting.for_each([&](std::size_t qs) {
    const auto q = static_cast<StateIndex>(qs);
    if (dist0[q] < 0) return;
    if (best && dist0[q] >= dist0[*best]) return;
    auto [d, l] = bfs(q, false);
    if (d[q] < 0) return;
    best = q;
    back = std::move(d);
    back_link = std::move(l);
  });
  if (!best) return report;
  report.empty = false;
  auto stem = labels(link0, a.initial(), *best, static_cast<std::size_t>(dist0[*best]));
  auto cycle = labels(back_link, *best, *best, static_cast<std::size_t>(back[*best]));
  report.witness = normalize(std::move(stem), std::move(cycle));
  return report;
}

EquivResult bounded_equiv(const Automaton& a1, const Condition& c1, const Automaton& a2,
                          const Condition& c2, std::size_t stem_max, std::size_t cycle_max) {
  if (!(a1.alphabet() == a2.alphabet()))
    throw PreconditionError("bounded equivalence needs a shared alphabet");
  EquivResult result;
  for_each_lasso(a1.alphabet().size(), stem_max, cycle_max, [&](const LassoWord& w) {
    const bool in1 = accepts(a1, c1, w);
    const bool in2 = accepts(a2, c2, w);
    if (in1 == in2) return true;
    result = {false, w, in1, in2};
    return false;
  });
  return result;
}

}  // namespace omega
