#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "../support/helpers.hpp"
#include "../support/oracle.hpp"
#include "omega/error.hpp"
#include "omega/semantics.hpp"
#include "omega/witnesses.hpp"

using namespace omega;
using namespace omega::testing;

TEST_CASE("figure automata") {
  auto f2 = figure_automaton(FigureId::kFig2);
  CHECK(f2.automaton.num_states() == 2);
  CHECK(is_deterministic(f2.automaton));
  CHECK(is_complete(f2.automaton));
  CHECK(format_set(f2.automaton, f2.automaton.table().set(0)) == "{q1}");
  CHECK(f2.cond == cond::Lprime());

  auto f3 = figure_automaton(FigureId::kFig3).automaton;
  CHECK(f3.num_states() == 3);
  CHECK(is_deterministic(f3));
  CHECK_FALSE(is_complete(f3));

  auto f4 = figure_automaton(FigureId::kFig4).automaton;
  CHECK_FALSE(is_deterministic(f4));
  CHECK(is_complete(f4));

  auto f5 = figure_automaton(FigureId::kFig5);
  CHECK(f5.automaton.num_states() == 6);
  CHECK(is_deterministic(f5.automaton));
  CHECK(is_complete(f5.automaton));
  CHECK(f5.cond == Condition::pair(StatKind::kFin, Rel::kEq));
  std::vector<std::string> sets;
  for (const auto& s : f5.automaton.table().sets()) sets.push_back(format_set(f5.automaton, s));
  CHECK(sets == std::vector<std::string>{"{}", "{q2}", "{q3 q4}"});
}

TEST_CASE("language predicates") {
  using L = LanguageId;
  CHECK(language_predicate(L::kL1, ab(":a")));
  CHECK(language_predicate(L::kL1, ab("ab:a")));
  CHECK_FALSE(language_predicate(L::kL1, ab(":ba")));
  CHECK(language_predicate(L::kL5, ab("b:a")));
  CHECK(language_predicate(L::kL5, ab("a:b")));
  CHECK_FALSE(language_predicate(L::kL5, ab(":b")));
  CHECK_FALSE(language_predicate(L::kL4, ab(":a")));
  CHECK(language_predicate(L::kL4, ab("b:a")));
  CHECK(language_predicate(L::kL2, ab("abba:b")));
  CHECK_FALSE(language_predicate(L::kL2, ab("a:b")));
  CHECK_FALSE(language_predicate(L::kL2, ab("b:a")));
  CHECK(language_predicate(L::kL3, ab("b:a")));
  CHECK_FALSE(language_predicate(L::kL3, ab("bab:b")));
  LassoWord foreign{{}, {2}};
  CHECK_THROWS_AS(language_predicate(L::kL1, foreign), PreconditionError);
}

// Independent check: expand enough letters and test the regular shape there.
TEST_CASE("predicates agree with prefix scans") {
  auto l2_scan = [](const std::string& s) {
    if (s[0] != 'a') return false;
    const auto i = s.find('a', 1);
    return i != std::string::npos;
  };
  for (const auto& w : enumerate_lassos(2, 4, 4)) {
    const std::string s = expand(w, 40);
    const std::string tail = s.substr(20);
    const bool cycle_a = tail.find('b') == std::string::npos;
    CHECK(language_predicate(LanguageId::kL1, w) == cycle_a);
    CHECK(language_predicate(LanguageId::kL4, w) == (cycle_a && s.find('b') != std::string::npos));
    CHECK(language_predicate(LanguageId::kL2, w) == l2_scan(s));
    CHECK(language_predicate(LanguageId::kL3, w) == (std::count(s.begin(), s.end(), 'a') >= 2));
    const bool l5 = (s[0] == 'a' && tail.find('b') != std::string::npos) || (s[0] == 'b' && cycle_a);
    CHECK(language_predicate(LanguageId::kL5, w) == l5);
    if (language_predicate(LanguageId::kL2, w)) CHECK(language_predicate(LanguageId::kL3, w));
  }
}

TEST_CASE("verify_figure") {
  for (auto id : {FigureId::kFig2, FigureId::kFig3, FigureId::kFig4, FigureId::kFig5}) {
    auto r = verify_figure(id, 4, 4);
    CHECK_MESSAGE(r.equal, to_string(id));
    const auto f = figure_automaton(id);
    for (const auto& w : enumerate_lassos(2, 3, 3))
      CHECK(brute_accepts(f.automaton, f.cond, w) == language_predicate(figure_language(id), w));
  }
  CHECK(parse_figure_id("fig3") == FigureId::kFig3);
  CHECK_FALSE(parse_figure_id("fig6").has_value());
  CHECK_THROWS_AS(verify_figure(FigureId::kFig2, 0, 1), PreconditionError);
}
