// corpus.hpp -- seeded random automata for property tests

#pragma once

#include <random>
#include <string>
#include <vector>

#include "omega/core.hpp"

namespace omega::testing {

struct CorpusShape {
  std::size_t min_states = 1;
  std::size_t max_states = 4;
  std::size_t symbols = 2;
  std::size_t max_sets = 3;
  bool deterministic = false;
  bool complete = false;
  double edge_probability = 0.4;   // per (p, x, q) when nondeterministic
  double member_probability = 0.4;  // per state per table set
};

class Corpus {
 public:
  explicit Corpus(std::uint64_t seed) : rng_(seed) {}

  Automaton next(const CorpusShape& shape) {
    std::uniform_int_distribution<std::size_t> n_dist(shape.min_states, shape.max_states);
    const std::size_t n = n_dist(rng_);
    std::vector<std::string> symbols;
    for (std::size_t i = 0; i < shape.symbols; ++i) symbols.push_back(std::string(1, char('a' + i)));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));

    std::vector<Transition> ts;
    std::uniform_int_distribution<StateIndex> pick(0, static_cast<StateIndex>(n - 1));
    std::bernoulli_distribution edge(shape.edge_probability);
    std::bernoulli_distribution present(0.8);
    for (StateIndex p = 0; p < n; ++p)
      for (SymbolIndex x = 0; x < shape.symbols; ++x) {
        if (shape.deterministic) {
          if (shape.complete || present(rng_)) ts.push_back({p, x, pick(rng_)});
          continue;
        }
        bool any = false;
        for (StateIndex q = 0; q < n; ++q)
          if (edge(rng_)) {
            ts.push_back({p, x, q});
            any = true;
          }
        if (shape.complete && !any) ts.push_back({p, x, pick(rng_)});
      }

    std::uniform_int_distribution<std::size_t> sets_dist(0, shape.max_sets);
    std::bernoulli_distribution member(shape.member_probability);
    std::vector<StateSet> sets;
    const std::size_t k = sets_dist(rng_);
    for (std::size_t i = 0; i < k; ++i) {
      StateSet s(n);
      for (std::size_t q = 0; q < n; ++q)
        if (member(rng_)) s.insert(q);
      sets.push_back(std::move(s));
    }
    return Automaton(Alphabet(symbols), names, ts, 0, AcceptanceTable(n, sets));
  }

  std::vector<Automaton> take(std::size_t count, const CorpusShape& shape) {
    std::vector<Automaton> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(next(shape));
    return out;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace omega::testing
