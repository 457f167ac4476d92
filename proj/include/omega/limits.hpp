// limits.hpp -- size guards for exponential constructions and searches

#pragma once

#include <cstddef>
#include <string>

namespace omega {

struct Limits {
  // |Q| for Q × 𝒫(Q) products and for 𝒫(Q)-sized tables.
  std::size_t powerset_states = 12;
  // Largest member set expanded into its powerset.
  std::size_t powerset_member = 12;
  // |Q| for the Q ∪ Q×Q construction, whose table is |Q|·2^|Q|·|Q| sized.
  std::size_t pair_product_states = 8;
  // (vertex, visited-set) pairs tracked by the membership oracle.
  std::size_t oracle_pairs = std::size_t{1} << 20;
  // Upper bound on states produced by any single construction.
  std::size_t constructed_states = std::size_t{1} << 20;

  /// Defaults, with OMEGA_SIZE_GUARD (a positive integer) replacing every
  /// state-count limit when set.
  static Limits from_environment();
};

/// Process-wide limits used when callers do not pass their own.
const Limits& default_limits();

void check_limit(std::size_t value, std::size_t limit, const std::string& what);

}  // namespace omega
