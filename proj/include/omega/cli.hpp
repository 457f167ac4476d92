// cli.hpp -- the omega command line
//
// Exit codes: 0 success or a true answer, 1 a false answer or a
// counterexample, 2 any usage, parse, validation or size-guard error.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace omega::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omega::cli
