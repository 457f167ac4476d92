// format.hpp -- the .oaut text format
//
//   # comment
//   alphabet a b
//   state q0 init
//   state q1
//   trans q0 a q1
//   table {q1} {}        (or "table -" for the empty table)
//   cond fin eq          (or: cond A | Aprime | L | Lprime)
//
// One directive per line; '#' starts a comment anywhere on a line. The
// alphabet line comes first; table and cond appear exactly once.

#pragma once

#include <string>
#include <string_view>

#include "omega/condition.hpp"
#include "omega/core.hpp"

namespace omega {

struct AutomatonDocument {
  Automaton automaton;
  Condition condition;
};

/// Throws ParseError (with line and column) or ValidationError.
AutomatonDocument parse_document(std::string_view text);

std::string serialize_document(const AutomatonDocument& doc);
std::string serialize_document(const Automaton& a, const Condition& c);

AutomatonDocument read_document_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace omega
