// witnesses.hpp -- the four example automata and their languages over {a, b}

#pragma once

#include <string_view>

#include "omega/buchi.hpp"
#include "omega/condition.hpp"
#include "omega/core.hpp"
#include "omega/words.hpp"

namespace omega {

enum class FigureId { kFig2, kFig3, kFig4, kFig5 };
enum class LanguageId { kL1, kL2, kL3, kL4, kL5 };

std::optional<FigureId> parse_figure_id(std::string_view text);
std::string_view to_string(FigureId id);

struct FigureAutomaton {
  Automaton automaton;
  Condition cond;
};

FigureAutomaton figure_automaton(FigureId id);

/// Language membership by direct inspection of the word. Symbol 0 is 'a' and
/// 1 is 'b'; throws PreconditionError on any other symbol.
bool language_predicate(LanguageId id, const LassoWord& w);

LanguageId figure_language(FigureId id);

/// Compares the figure automaton with its language predicate on every
/// canonical word within the bounds; the first disagreement is reported.
EquivResult verify_figure(FigureId id, std::size_t stem_max, std::size_t cycle_max);

}  // namespace omega
