// words.cpp

#include "omega/words.hpp"

#include <algorithm>

#include "omega/error.hpp"

namespace omega {

bool is_primitive(const std::vector<SymbolIndex>& v) {
  const std::size_t n = v.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = v[i] == v[i - d];
    if (periodic) return false;
  }
  return true;
}

namespace {

std::vector<SymbolIndex> primitive_root(const std::vector<SymbolIndex>& v) {
  const std::size_t n = v.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = v[i] == v[i - d];
    if (periodic) return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(d)};
  }
  return v;
}

}  // namespace

LassoWord normalize(std::vector<SymbolIndex> stem, std::vector<SymbolIndex> cycle) {
  if (cycle.empty()) throw PreconditionError("lasso cycle must be nonempty");
  cycle = primitive_root(cycle);
  while (!stem.empty() && stem.back() == cycle.back()) {
    stem.pop_back();
    std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
  }
  return {std::move(stem), std::move(cycle)};
}

LassoWord normalize(const LassoWord& w) { return normalize(w.stem, w.cycle); }

bool is_canonical(const LassoWord& w) {
  if (w.cycle.empty() || !is_primitive(w.cycle)) return false;
  return w.stem.empty() || w.stem.back() != w.cycle.back();
}

SymbolIndex letter_at(const LassoWord& w, std::size_t i) {
  if (i < w.stem.size()) return w.stem[i];
  return w.cycle[(i - w.stem.size()) % w.cycle.size()];
}

bool word_eq(const LassoWord& a, const LassoWord& b) { return normalize(a) == normalize(b); }

namespace {

// Advances `digits` to the next word of the same length in lexicographic
// order; false once it wraps.
bool next_word(std::vector<SymbolIndex>& digits, std::size_t base) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < base) return true;
    digits[i] = 0;
  }
  return false;
}

}  // namespace

bool for_each_lasso(std::size_t alphabet_size, std::size_t stem_max, std::size_t cycle_max,
                    const std::function<bool(const LassoWord&)>& visit) {
  if (alphabet_size == 0 || cycle_max == 0) return true;
  LassoWord w;
  for (std::size_t total = 1; total <= stem_max + cycle_max; ++total) {
    const std::size_t s_lo = total > cycle_max ? total - cycle_max : 0;
    const std::size_t s_hi = std::min(stem_max, total - 1);
    for (std::size_t s = s_lo; s <= s_hi; ++s) {
      w.stem.assign(s, 0);
      do {
        w.cycle.assign(total - s, 0);
        do {
          if (!w.stem.empty() && w.stem.back() == w.cycle.back()) continue;
          if (!is_primitive(w.cycle)) continue;
          if (!visit(w)) return false;
        } while (next_word(w.cycle, alphabet_size));
      } while (next_word(w.stem, alphabet_size));
    }
  }
  return true;
}

std::vector<LassoWord> enumerate_lassos(std::size_t alphabet_size, std::size_t stem_max,
                                        std::size_t cycle_max) {
  std::vector<LassoWord> out;
  for_each_lasso(alphabet_size, stem_max, cycle_max, [&](const LassoWord& w) {
    out.push_back(w);
    return true;
  });
  return out;
}

namespace {

std::vector<SymbolIndex> parse_part(const Alphabet& alphabet, std::string_view part,
                                    std::size_t column) {
  std::vector<SymbolIndex> out;
  if (part.empty()) return out;
  if (alphabet.single_character()) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      auto sym = alphabet.find(part.substr(i, 1));
      if (!sym) throw ParseError(1, column + i, "unknown symbol '" + std::string(part.substr(i, 1)) + "'");
      out.push_back(*sym);
    }
    return out;
  }
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = part.find(',', start);
    auto token = part.substr(start, comma == std::string_view::npos ? part.npos : comma - start);
    auto sym = alphabet.find(token);
    if (!sym) throw ParseError(1, column + start, "unknown symbol '" + std::string(token) + "'");
    out.push_back(*sym);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_part(const Alphabet& alphabet, const std::vector<SymbolIndex>& part) {
  std::string out;
  const bool compact = alphabet.single_character();
  for (std::size_t i = 0; i < part.size(); ++i) {
    if (i > 0 && !compact) out += ',';
    out += alphabet.symbol(part[i]);
  }
  return out;
}

}  // namespace

LassoWord parse_word(const Alphabet& alphabet, std::string_view text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(1, 1, "word must have the form STEM:CYCLE");
  if (text.find(':', colon + 1) != std::string_view::npos)
    throw ParseError(1, text.find(':', colon + 1) + 1, "more than one ':' in word");
  auto stem = parse_part(alphabet, text.substr(0, colon), 1);
  auto cycle = parse_part(alphabet, text.substr(colon + 1), colon + 2);
  if (cycle.empty()) throw ParseError(1, colon + 2, "word cycle must be nonempty");
  return normalize(std::move(stem), std::move(cycle));
}

std::string format_word(const Alphabet& alphabet, const LassoWord& w) {
  return format_part(alphabet, w.stem) + ":" + format_part(alphabet, w.cycle);
}

}  // namespace omega
