// limits.cpp

#include "omega/limits.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

#include "omega/error.hpp"

namespace omega {

Limits Limits::from_environment() {
  Limits limits;
  const char* raw = std::getenv("OMEGA_SIZE_GUARD");
  if (raw == nullptr || *raw == '\0') return limits;
  std::size_t value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value == 0)
    throw Error("OMEGA_SIZE_GUARD must be a positive integer, got '" + std::string(raw) + "'");
  limits.powerset_states = value;
  limits.powerset_member = value;
  limits.pair_product_states = value;
  return limits;
}

const Limits& default_limits() {
  static const Limits limits = Limits::from_environment();
  return limits;
}

void check_limit(std::size_t value, std::size_t limit, const std::string& what) {
  if (value > limit)
    throw SizeGuardError(what + " is " + std::to_string(value) + ", above the limit of " +
                         std::to_string(limit));
}

}  // namespace omega
