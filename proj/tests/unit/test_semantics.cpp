#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support/corpus.hpp"
#include "../support/helpers.hpp"
#include "../support/oracle.hpp"
#include "omega/error.hpp"
#include "omega/semantics.hpp"
#include "omega/witnesses.hpp"

using namespace omega;
using namespace omega::testing;

namespace {

std::set<BruteSummary> as_masks(const std::vector<RunSummary>& ss) {
  std::set<BruteSummary> out;
  for (const auto& s : ss) out.insert({mask_of(s.run), mask_of(s.inf)});
  return out;
}

RunSummary summary(std::size_t n, std::initializer_list<std::size_t> run,
                   std::initializer_list<std::size_t> inf) {
  return {StateSet(n, run), StateSet(n, inf)};
}

}  // namespace

TEST_CASE("run_summaries on the figure automata") {
  auto f2 = figure_automaton(FigureId::kFig2).automaton;
  auto f3 = figure_automaton(FigureId::kFig3).automaton;
  auto f4 = figure_automaton(FigureId::kFig4).automaton;

  auto s2 = run_summaries(f2, ab(":a"));
  REQUIRE(s2.size() == 1);
  CHECK(s2[0] == summary(2, {0}, {0}));

  auto s4 = run_summaries(f4, ab("b:a"));
  CHECK(as_masks(s4) == std::set<BruteSummary>{{0b01, 0b01}, {0b10, 0b10}});
  CHECK(as_masks(s4) == brute_summaries(f4, ab("b:a")));

  CHECK(run_summaries(f3, ab(":b")).empty());
}

TEST_CASE("run_summaries rejects foreign symbols") {
  auto f2 = figure_automaton(FigureId::kFig2).automaton;
  CHECK_THROWS_AS(run_summaries(f2, LassoWord{{}, {2}}), PreconditionError);
  CHECK_THROWS_AS(accepts(f2, cond::L(), LassoWord{{5}, {0}}), PreconditionError);
}

TEST_CASE("oracle pair limit") {
  auto f2 = figure_automaton(FigureId::kFig2).automaton;
  Limits tiny;
  tiny.oracle_pairs = 2;
  CHECK_THROWS_AS(run_summaries(f2, ab("abab:ab"), tiny), SizeGuardError);
}

TEST_CASE("stat_of") {
  const RunSummary s = summary(3, {0, 1}, {1});
  CHECK(stat_of(StatKind::kFin, s, 3) == StateSet(3, {0}));
  CHECK(stat_of(StatKind::kNinf, summary(3, {1}, {1}), 3) == StateSet(3, {0, 2}));
  CHECK(stat_of(StatKind::kRun, s, 3) == s.run);
  CHECK(stat_of(StatKind::kInf, s, 3) == s.inf);
}

TEST_CASE("condition_holds") {
  CHECK(condition_holds(cond::buchi(), summary(1, {0}, {0}), AcceptanceTable(1, {StateSet(1, {0})})));
  CHECK_FALSE(condition_holds(cond::Lprime(), summary(2, {1}, {1}), AcceptanceTable(2, {StateSet(2, {1})})));
  const AcceptanceTable fig5(6, {StateSet(6), StateSet(6, {2}), StateSet(6, {3, 4})});
  CHECK(condition_holds(Condition::pair(StatKind::kFin, Rel::kEq), summary(6, {1}, {1}), fig5));
  CHECK_FALSE(condition_holds(cond::buchi(), summary(1, {0}, {0}), AcceptanceTable(1)));
}

TEST_CASE("accepts on the figure automata") {
  auto f2 = figure_automaton(FigureId::kFig2);
  auto f3 = figure_automaton(FigureId::kFig3);
  auto f5 = figure_automaton(FigureId::kFig5);
  CHECK(accepts(f2.automaton, f2.cond, ab(":a")));
  CHECK_FALSE(accepts(f3.automaton, f3.cond, ab("a:b")));
  CHECK(accepts(f5.automaton, f5.cond, ab("b:a")));
  CHECK_FALSE(accepts(f5.automaton, f5.cond, ab(":b")));
}

TEST_CASE("summary oracle matches the brute-force oracle and its invariants") {
  Corpus corpus(21);
  const auto words = enumerate_lassos(2, 3, 3);
  for (const auto& a : corpus.take(150, CorpusShape{})) {
    const StateSet reach = reachable_states(a);
    for (const auto& w : words) {
      const auto ss = run_summaries(a, w);
      CHECK(as_masks(ss) == brute_summaries(a, w));
      for (const auto& s : ss) {
        CHECK_FALSE(s.inf.empty());
        CHECK(s.inf.subset_of(s.run));
        CHECK(s.run.subset_of(reach));
      }
      if (is_deterministic(a)) CHECK(ss.size() <= 1);
      if (is_deterministic(a) && is_complete(a)) CHECK(ss.size() == 1);
    }
  }
}

TEST_CASE("direct evaluation matches summaries and brute force for every condition") {
  Corpus corpus(22);
  const auto words = enumerate_lassos(2, 3, 3);
  std::size_t accepted = 0, total = 0;
  for (const auto& a : corpus.take(150, CorpusShape{})) {
    for (const auto& w : words) {
      const auto brute = brute_summaries(a, w);
      for (const auto& c : Condition::all()) {
        bool expect = false;
        for (const auto& s : brute) expect = expect || brute_holds(c, s, a);
        const bool fast = accepts(a, c, w);
        const bool slow = accepts_by_summaries(a, c, w);
        if (fast != expect || slow != expect)
          FAIL_CHECK(c.to_string() << " on " << format_word(a.alphabet(), w) << ": fast=" << fast
                                   << " summaries=" << slow << " brute=" << expect);
        accepted += expect ? 1 : 0;
        ++total;
      }
    }
  }
  CHECK(accepted > total / 20);
  CHECK(accepted < total - total / 20);
}

TEST_CASE("accepts is invariant under normalize") {
  Corpus corpus(23);
  const std::vector<LassoWord> raws = {ab_raw("a", "ba"), ab_raw("ab", "abab"), ab_raw("bb", "b"),
                                       ab_raw("aab", "aab"), ab_raw("", "abab")};
  for (const auto& a : corpus.take(80, CorpusShape{}))
    for (const auto& c : Condition::all())
      for (const auto& raw : raws) CHECK(accepts(a, c, raw) == accepts(a, c, normalize(raw)));
}

TEST_CASE("summary witnesses replay to their statistics") {
  Corpus corpus(24);
  const auto words = enumerate_lassos(2, 3, 3);
  for (const auto& a : corpus.take(80, CorpusShape{})) {
    for (const auto& w : words) {
      for (const auto& sw : run_summaries_with_witnesses(a, w)) {
        const auto& p = sw.path;
        REQUIRE_FALSE(p.prefix.empty());
        REQUIRE_FALSE(p.cycle.empty());
        CHECK(p.prefix.front() == a.initial());
        CHECK(p.cycle.back() == p.prefix.back());
        // Simulate: every step must be a transition on the word's letter.
        std::vector<StateIndex> path = p.prefix;
        for (int r = 0; r < 3; ++r) path.insert(path.end(), p.cycle.begin(), p.cycle.end());
        bool valid = true;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
          auto succ = a.successors(path[i], letter_at(w, i));
          valid = valid && std::find(succ.begin(), succ.end(), path[i + 1]) != succ.end();
        }
        CHECK(valid);
        // The cycle must start at the same word phase where it ends.
        const std::size_t k = p.prefix.size() - 1;
        auto phase = [&](std::size_t i) {
          return i < w.stem.size() ? i : w.stem.size() + (i - w.stem.size()) % w.cycle.size();
        };
        CHECK(phase(k) == phase(k + p.cycle.size()));
        StateSet run(a.num_states()), inf(a.num_states());
        for (std::size_t i = 1; i < path.size(); ++i) run.insert(path[i]);
        for (auto q : p.cycle) inf.insert(q);
        CHECK(run == sw.summary.run);
        CHECK(inf == sw.summary.inf);
      }
    }
  }
}
