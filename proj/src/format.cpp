// format.cpp

#include "omega/format.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "omega/error.hpp"

namespace omega {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

// Splits a line (comment already removed) on whitespace, except that a
// braced set "{ ... }" is kept as one token.
std::vector<Token> tokenize(std::string_view line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i])) != 0) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (line[i] == '{') {
      const std::size_t close = line.find('}', i);
      if (close == std::string_view::npos) throw ParseError(line_no, start + 1, "unterminated '{'");
      i = close + 1;
    } else {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])) == 0) {
        if (line[i] == '{' || line[i] == '}')
          throw ParseError(line_no, i + 1, "unexpected brace");
        ++i;
      }
    }
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

std::vector<std::string> set_members(const Token& t, std::size_t line_no) {
  std::vector<std::string> out;
  if (t.text.size() < 2 || t.text.front() != '{' || t.text.back() != '}')
    throw ParseError(line_no, t.column, "expected a set like {q0 q1}");
  std::istringstream in(t.text.substr(1, t.text.size() - 2));
  for (std::string id; in >> id;) {
    if (!is_valid_token(id)) throw ParseError(line_no, t.column, "invalid state name '" + id + "'");
    out.push_back(id);
  }
  return out;
}

}  // namespace

AutomatonDocument parse_document(std::string_view text) {
  RawAutomaton raw;
  bool have_alphabet = false;
  bool have_table = false;
  bool have_initial = false;
  std::optional<Condition> cond;
  std::size_t line_no = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    auto tokens = tokenize(line, line_no);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string& directive = tokens[0].text;
    auto arg_error = [&](const std::string& what) {
      return ParseError(line_no, tokens[0].column, directive + ": " + what);
    };
    auto check_token = [&](const Token& t, const char* what) {
      if (!is_valid_token(t.text))
        throw ParseError(line_no, t.column, std::string("invalid ") + what + " '" + t.text + "'");
    };

    if (!have_alphabet && directive != "alphabet")
      throw ParseError(line_no, tokens[0].column, "the first directive must be 'alphabet'");
    if (directive == "alphabet") {
      if (have_alphabet) throw arg_error("appears more than once");
      if (tokens.size() < 2) throw arg_error("needs at least one symbol");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        check_token(tokens[i], "symbol");
        raw.alphabet.push_back(tokens[i].text);
      }
      have_alphabet = true;
    } else if (directive == "state") {
      if (tokens.size() < 2 || tokens.size() > 3) throw arg_error("expected 'state ID [init]'");
      check_token(tokens[1], "state name");
      if (tokens.size() == 3) {
        if (tokens[2].text != "init")
          throw ParseError(line_no, tokens[2].column, "expected 'init'");
        if (have_initial) throw ParseError(line_no, tokens[2].column, "second initial state");
        raw.initial = tokens[1].text;
        have_initial = true;
      }
      raw.states.push_back(tokens[1].text);
    } else if (directive == "trans") {
      if (tokens.size() != 4) throw arg_error("expected 'trans SRC SYM DST'");
      for (std::size_t i = 1; i < 4; ++i) check_token(tokens[i], i == 2 ? "symbol" : "state name");
      if (std::find(raw.alphabet.begin(), raw.alphabet.end(), tokens[2].text) == raw.alphabet.end())
        throw ParseError(line_no, tokens[2].column, "symbol '" + tokens[2].text + "' not in alphabet");
      for (std::size_t i : {1, 3})
        if (std::find(raw.states.begin(), raw.states.end(), tokens[i].text) == raw.states.end())
          throw ParseError(line_no, tokens[i].column, "undeclared state '" + tokens[i].text + "'");
      raw.transitions.push_back({tokens[1].text, tokens[2].text, tokens[3].text});
    } else if (directive == "table") {
      if (have_table) throw arg_error("appears more than once");
      if (tokens.size() < 2) throw arg_error("needs sets, or '-' for the empty table");
      if (tokens.size() == 2 && tokens[1].text == "-") {
        // empty table
      } else {
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          raw.table.push_back(set_members(tokens[i], line_no));
          for (const auto& id : raw.table.back())
            if (std::find(raw.states.begin(), raw.states.end(), id) == raw.states.end())
              throw ParseError(line_no, tokens[i].column, "undeclared state '" + id + "'");
        }
      }
      have_table = true;
    } else if (directive == "cond") {
      if (cond) throw arg_error("appears more than once");
      std::string rest;
      for (std::size_t i = 1; i < tokens.size(); ++i) rest += (i > 1 ? " " : "") + tokens[i].text;
      cond = Condition::parse(rest);
      if (!cond) throw arg_error("unknown condition '" + rest + "'");
    } else {
      throw ParseError(line_no, tokens[0].column, "unknown directive '" + directive + "'");
    }
    if (end == text.size()) break;
  }

  if (!have_alphabet) throw ParseError(line_no, 1, "missing 'alphabet' line");
  if (raw.states.empty()) throw ParseError(line_no, 1, "no 'state' lines");
  if (!have_initial) throw ParseError(line_no, 1, "no state is marked init");
  if (!have_table) throw ParseError(line_no, 1, "missing 'table' line");
  if (!cond) throw ParseError(line_no, 1, "missing 'cond' line");
  return {Automaton::from_raw(raw), *cond};
}

std::string serialize_document(const Automaton& a, const Condition& c) {
  std::string out = "alphabet";
  for (const auto& s : a.alphabet().symbols()) out += " " + s;
  out += '\n';
  for (StateIndex q = 0; q < a.num_states(); ++q)
    out += "state " + a.state_name(q) + (q == a.initial() ? " init\n" : "\n");
  for (const auto& t : a.transitions())
    out += "trans " + a.state_name(t.src) + " " + a.alphabet().symbol(t.sym) + " " +
           a.state_name(t.dst) + "\n";
  out += "table";
  if (a.table().empty()) out += " -";
  for (const auto& s : a.table().sets()) out += " " + format_set(a, s);
  out += "\ncond " + c.to_string() + "\n";
  return out;
}

std::string serialize_document(const AutomatonDocument& doc) {
  return serialize_document(doc.automaton, doc.condition);
}

AutomatonDocument read_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace omega
