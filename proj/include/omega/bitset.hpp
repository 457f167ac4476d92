// bitset.hpp -- fixed-width dynamic bitset used for state sets and vertex masks

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

namespace omega {

/// A set of small non-negative integers over a universe [0, size()).
/// Two sets compare equal only if they share the universe size.
class StateSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  StateSet() = default;
  explicit StateSet(std::size_t universe)
      : universe_(universe), words_(words_for(universe), 0) {}
  StateSet(std::size_t universe, std::initializer_list<std::size_t> members)
      : StateSet(universe) {
    for (auto m : members) insert(m);
  }

  static std::size_t words_for(std::size_t universe) {
    return (universe + kWordBits - 1) / kWordBits;
  }

  static StateSet full(std::size_t universe) {
    StateSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }

  std::size_t universe() const { return universe_; }
  std::span<const Word> words() const { return words_; }
  std::span<Word> words() { return words_; }

  void insert(std::size_t i) { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void erase(std::size_t i) { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
  bool contains(std::size_t i) const {
    return i < universe_ && ((words_[i / kWordBits] >> (i % kWordBits)) & 1U) != 0;
  }

  std::size_t count() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  bool intersects(const StateSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }
  bool subset_of(const StateSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }

  StateSet& operator|=(const StateSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  StateSet& operator&=(const StateSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  StateSet& operator-=(const StateSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
  friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

  StateSet complement() const {
    StateSet c = full(universe_);
    return c -= *this;
  }

  /// Members in increasing order.
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        auto tz = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * kWordBits + tz);
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const StateSet&, const StateSet&) = default;

  /// Lexicographic order on the increasing member sequence.
  friend bool operator<(const StateSet& a, const StateSet& b) {
    auto ma = a.members();
    auto mb = b.members();
    if (ma != mb) return ma < mb;
    return a.universe_ < b.universe_;
  }

  std::size_t hash() const {
    std::size_t h = universe_ * 0x9E3779B97F4A7C15ULL;
    for (auto w : words_) h ^= std::hash<Word>{}(w) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const { return s.hash(); }
};

}  // namespace omega
