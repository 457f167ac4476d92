// helpers.hpp -- small conveniences shared by the test binaries

#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "omega/format.hpp"
#include "omega/words.hpp"

namespace omega::testing {

inline AutomatonDocument doc(std::string_view text) { return parse_document(text); }

inline Automaton automaton(std::string_view text) { return parse_document(text).automaton; }

/// Word over {a, b} written STEM:CYCLE, normalized.
inline LassoWord ab(std::string_view text) { return parse_word(Alphabet({"a", "b"}), text); }

/// Raw (not normalized) word over {a, b}.
inline LassoWord ab_raw(std::string_view stem, std::string_view cycle) {
  LassoWord w;
  for (char c : stem) w.stem.push_back(static_cast<SymbolIndex>(c - 'a'));
  for (char c : cycle) w.cycle.push_back(static_cast<SymbolIndex>(c - 'a'));
  return w;
}

inline std::string expand(const LassoWord& w, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) out += static_cast<char>('a' + letter_at(w, i));
  return out;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace omega::testing
