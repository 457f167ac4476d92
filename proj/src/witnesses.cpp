// witnesses.cpp

#include "omega/witnesses.hpp"

#include <algorithm>

#include "omega/error.hpp"
#include "omega/semantics.hpp"

namespace omega {

std::optional<FigureId> parse_figure_id(std::string_view text) {
  if (text == "fig2") return FigureId::kFig2;
  if (text == "fig3") return FigureId::kFig3;
  if (text == "fig4") return FigureId::kFig4;
  if (text == "fig5") return FigureId::kFig5;
  return std::nullopt;
}

std::string_view to_string(FigureId id) {
  switch (id) {
    case FigureId::kFig2: return "fig2";
    case FigureId::kFig3: return "fig3";
    case FigureId::kFig4: return "fig4";
    case FigureId::kFig5: return "fig5";
  }
  return "?";
}

namespace {

FigureAutomaton build(std::vector<std::string> states, std::vector<RawAutomaton::Edge> edges,
                      std::vector<std::vector<std::string>> table, Condition cond) {
  RawAutomaton raw;
  raw.alphabet = {"a", "b"};
  raw.states = std::move(states);
  raw.transitions = std::move(edges);
  raw.initial = "q0";
  raw.table = std::move(table);
  return {Automaton::from_raw(raw), cond};
}

}  // namespace

FigureAutomaton figure_automaton(FigureId id) {
  switch (id) {
    case FigureId::kFig2:
      return build({"q0", "q1"},
                   {{"q0", "a", "q0"}, {"q0", "b", "q1"}, {"q1", "a", "q0"}, {"q1", "b", "q1"}},
                   {{"q1"}}, cond::Lprime());
    case FigureId::kFig3:
      return build({"q0", "q1", "q2"},
                   {{"q0", "a", "q1"}, {"q1", "b", "q1"}, {"q1", "a", "q2"}, {"q2", "a", "q2"},
                    {"q2", "b", "q2"}},
                   {{"q1"}}, cond::Lprime());
    case FigureId::kFig4:
      return build({"q0", "q1"},
                   {{"q0", "a", "q0"}, {"q0", "b", "q0"}, {"q0", "b", "q1"}, {"q1", "b", "q0"},
                    {"q1", "a", "q1"}},
                   {{"q0"}}, cond::Lprime());
    case FigureId::kFig5:
      return build({"q0", "q1", "q2", "q3", "q4", "q5"},
                   {{"q0", "a", "q1"}, {"q0", "b", "q3"}, {"q1", "a", "q2"}, {"q1", "b", "q1"},
                    {"q2", "b", "q1"}, {"q2", "a", "q2"}, {"q3", "a", "q4"}, {"q3", "b", "q4"},
                    {"q4", "a", "q5"}, {"q4", "b", "q4"}, {"q5", "b", "q4"}, {"q5", "a", "q5"}},
                   {{}, {"q2"}, {"q3", "q4"}}, Condition::pair(StatKind::kFin, Rel::kEq));
  }
  throw PreconditionError("unknown figure");
}

LanguageId figure_language(FigureId id) {
  switch (id) {
    case FigureId::kFig2: return LanguageId::kL1;
    case FigureId::kFig3: return LanguageId::kL2;
    case FigureId::kFig4: return LanguageId::kL4;
    case FigureId::kFig5: return LanguageId::kL5;
  }
  return LanguageId::kL1;
}

bool language_predicate(LanguageId id, const LassoWord& w) {
  constexpr SymbolIndex a = 0;
  constexpr SymbolIndex b = 1;
  for (auto s : w.stem)
    if (s > b) throw PreconditionError("language predicates are over {a, b}");
  for (auto s : w.cycle)
    if (s > b) throw PreconditionError("language predicates are over {a, b}");
  auto count = [](const std::vector<SymbolIndex>& v, SymbolIndex s) {
    return static_cast<std::size_t>(std::count(v.begin(), v.end(), s));
  };
  const bool cycle_all_a = count(w.cycle, b) == 0;
  switch (id) {
    case LanguageId::kL1:
      return cycle_all_a;
    case LanguageId::kL2: {
      // ab*a…: once past the stem the word repeats with period |cycle|, so a
      // second a, if any, occurs by index |stem| + |cycle|.
      if (letter_at(w, 0) != a) return false;
      const std::size_t bound = w.stem.size() + w.cycle.size() + 1;
      for (std::size_t i = 1; i < bound; ++i)
        if (letter_at(w, i) == a) return true;
      return false;
    }
    case LanguageId::kL3:
      // At least two a's: any a in the cycle repeats forever.
      return count(w.cycle, a) > 0 || count(w.stem, a) >= 2;
    case LanguageId::kL4:
      return cycle_all_a && count(w.stem, b) > 0;
    case LanguageId::kL5: {
      const SymbolIndex first = letter_at(w, 0);
      return (first == a && count(w.cycle, b) > 0) || (first == b && cycle_all_a);
    }
  }
  return false;
}

EquivResult verify_figure(FigureId id, std::size_t stem_max, std::size_t cycle_max) {
  if (stem_max < 1 || cycle_max < 1) throw PreconditionError("verify_figure bounds must be at least 1");
  const auto fig = figure_automaton(id);
  const LanguageId lang = figure_language(id);
  EquivResult result;
  for_each_lasso(2, stem_max, cycle_max, [&](const LassoWord& w) {
    const bool in1 = accepts(fig.automaton, fig.cond, w);
    const bool in2 = language_predicate(lang, w);
    if (in1 == in2) return true;
    result = {false, w, in1, in2};
    return false;
  });
  return result;
}

}  // namespace omega
