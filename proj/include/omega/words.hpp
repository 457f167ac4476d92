// words.hpp -- ultimately periodic words u·v^ω
//
// Symbols are indices into an Alphabet. A word is canonical when its cycle
// is primitive and the stem does not end with the cycle's last symbol; two
// canonical words denote the same ω-word iff they are structurally equal.

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "omega/core.hpp"

namespace omega {

struct LassoWord {
  std::vector<SymbolIndex> stem;
  std::vector<SymbolIndex> cycle;
  friend auto operator<=>(const LassoWord&, const LassoWord&) = default;
};

/// Canonical representative of stem·cycle^ω. Throws PreconditionError on an
/// empty cycle.
LassoWord normalize(std::vector<SymbolIndex> stem, std::vector<SymbolIndex> cycle);
LassoWord normalize(const LassoWord& w);

bool is_canonical(const LassoWord& w);
bool is_primitive(const std::vector<SymbolIndex>& v);

SymbolIndex letter_at(const LassoWord& w, std::size_t i);

/// Equality of the denoted ω-words (structural on canonical inputs; any
/// input is normalized first).
bool word_eq(const LassoWord& a, const LassoWord& b);

/// Visits every canonical word over `alphabet_size` symbols with
/// |stem| ≤ stem_max and 1 ≤ |cycle| ≤ cycle_max, ordered by
/// (|stem|+|cycle|, |stem|, stem, cycle). The visitor returns false to stop.
/// Returns false if stopped early.
bool for_each_lasso(std::size_t alphabet_size, std::size_t stem_max, std::size_t cycle_max,
                    const std::function<bool(const LassoWord&)>& visit);

std::vector<LassoWord> enumerate_lassos(std::size_t alphabet_size, std::size_t stem_max,
                                        std::size_t cycle_max);

/// "STEM:CYCLE". Symbols are single characters when every symbol of the
/// alphabet is one character long, otherwise comma-separated. Throws
/// ParseError on unknown symbols or an empty cycle. The result is normalized.
LassoWord parse_word(const Alphabet& alphabet, std::string_view text);
std::string format_word(const Alphabet& alphabet, const LassoWord& w);

}  // namespace omega
