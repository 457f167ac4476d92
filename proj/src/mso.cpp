// mso.cpp

#include "omega/mso.hpp"

#include <cctype>

#include "omega/error.hpp"
#include "omega/transforms.hpp"

namespace omega::mso {

using K = Formula::Kind;

namespace {

Formula atom(K kind, std::string a, std::string b) {
  Formula f;
  f.kind = kind;
  f.a = std::move(a);
  f.b = std::move(b);
  return f;
}

Formula node(K kind, std::string var, std::vector<Formula> sub) {
  Formula f;
  f.kind = kind;
  f.a = std::move(var);
  f.sub = std::move(sub);
  return f;
}

}  // namespace

Formula fo_eq(std::string x, std::string y) { return atom(K::kFOEq, std::move(x), std::move(y)); }
Formula succ(std::string x, std::string y) { return atom(K::kSucc, std::move(x), std::move(y)); }
Formula lt(std::string x, std::string y) { return atom(K::kLt, std::move(x), std::move(y)); }
Formula letter(std::string sym, std::string x) { return atom(K::kLetter, std::move(sym), std::move(x)); }
Formula set_mem(std::string set, std::string x) { return atom(K::kSetMem, std::move(set), std::move(x)); }
Formula negate(Formula f) { return node(K::kNot, {}, {std::move(f)}); }
Formula conj(std::vector<Formula> fs) { return node(K::kAnd, {}, std::move(fs)); }
Formula disj(std::vector<Formula> fs) { return node(K::kOr, {}, std::move(fs)); }
Formula implies(Formula f, Formula g) { return node(K::kImplies, {}, {std::move(f), std::move(g)}); }
Formula exists1(std::string x, Formula f) { return node(K::kExistsFO, std::move(x), {std::move(f)}); }
Formula forall1(std::string x, Formula f) { return node(K::kForallFO, std::move(x), {std::move(f)}); }
Formula exists2(std::string x, Formula f) { return node(K::kExistsSO, std::move(x), {std::move(f)}); }
Formula forall2(std::string x, Formula f) { return node(K::kForallSO, std::move(x), {std::move(f)}); }

std::set<std::string> free_vars(const Formula& f) {
  switch (f.kind) {
    case K::kFOEq:
    case K::kSucc:
    case K::kLt:
    case K::kSetMem:
      return {f.a, f.b};
    case K::kLetter:
      return {f.b};
    case K::kNot:
    case K::kAnd:
    case K::kOr:
    case K::kImplies: {
      std::set<std::string> out;
      for (const auto& s : f.sub) out.merge(free_vars(s));
      return out;
    }
    case K::kExistsFO:
    case K::kForallFO:
    case K::kExistsSO:
    case K::kForallSO: {
      auto out = free_vars(f.sub.at(0));
      out.erase(f.a);
      return out;
    }
  }
  return {};
}

Formula c_formula(StatKind kind, const std::string& set_var) {
  auto run = [&] { return exists1("x", conj({exists1("y", succ("y", "x")), set_mem(set_var, "x")})); };
  auto inf = [&] { return forall1("x", exists1("y", conj({lt("x", "y"), set_mem(set_var, "y")}))); };
  switch (kind) {
    case StatKind::kRun: return run();
    case StatKind::kInf: return inf();
    case StatKind::kFin: return conj({run(), negate(inf())});
    case StatKind::kNinf: return negate(inf());
  }
  return inf();
}

Formula cond_formula(StatKind kind, Rel rel, const AcceptanceTable& table,
                     const std::vector<std::string>& vars) {
  std::vector<Formula> alternatives;
  for (const auto& f : table.sets()) {
    switch (rel) {
      case Rel::kMeets:
        f.for_each([&](std::size_t q) { alternatives.push_back(c_formula(kind, vars[q])); });
        break;
      case Rel::kSubseteq: {
        std::vector<Formula> parts;
        f.complement().for_each([&](std::size_t q) { parts.push_back(negate(c_formula(kind, vars[q]))); });
        alternatives.push_back(conj(std::move(parts)));
        break;
      }
      case Rel::kEq: {
        std::vector<Formula> parts;
        f.for_each([&](std::size_t q) { parts.push_back(c_formula(kind, vars[q])); });
        f.complement().for_each([&](std::size_t q) { parts.push_back(negate(c_formula(kind, vars[q]))); });
        alternatives.push_back(conj(std::move(parts)));
        break;
      }
    }
  }
  return disj(std::move(alternatives));
}

Formula automaton_formula(const Automaton& a, const Condition& cond) {
  if (!cond.is_pair())
    throw PreconditionError("MSO emission takes a pair condition; rewrite " + cond.to_string() +
                            " first");
  const std::size_t n = a.num_states();
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < n; ++i) vars.push_back("X" + std::to_string(i));

  std::vector<Formula> disjoint;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (p != q) disjoint.push_back(negate(exists1("x", conj({set_mem(vars[p], "x"), set_mem(vars[q], "x")}))));

  std::vector<Formula> moves;
  for (const auto& t : a.transitions())
    moves.push_back(conj({set_mem(vars[t.src], "x"), letter(a.alphabet().symbol(t.sym), "x"),
                          set_mem(vars[t.dst], "y")}));
  Formula transitions = forall1("x", forall1("y", implies(succ("x", "y"), disj(std::move(moves)))));

  Formula initial = exists1("x", conj({negate(exists1("y", succ("y", "x"))), set_mem(vars[a.initial()], "x")}));

  Formula body = conj({conj(std::move(disjoint)), std::move(transitions), std::move(initial),
                       cond_formula(cond.kind(), cond.rel(), a.table(), vars)});
  for (std::size_t i = n; i-- > 0;) body = exists2(vars[i], std::move(body));
  return body;
}

std::pair<Automaton, Condition> to_pair_condition(const Automaton& a, const Condition& cond) {
  if (cond.is_pair()) return {a, cond};
  switch (cond.name()) {
    case NamedCondition::kA:
      return {a_to_run_meets(a), Condition::pair(StatKind::kRun, Rel::kMeets)};
    case NamedCondition::kAprime:
      return {aprime_to_run_subseteq(a), Condition::pair(StatKind::kRun, Rel::kSubseteq)};
    case NamedCondition::kL:
      return {complement_table(a), Condition::pair(StatKind::kNinf, Rel::kSubseteq)};
    case NamedCondition::kLprime:
      return {complement_table(a), Condition::pair(StatKind::kNinf, Rel::kMeets)};
  }
  return {a, cond};
}

std::size_t count_kind(const Formula& f, Formula::Kind kind) {
  std::size_t n = f.kind == kind ? 1 : 0;
  for (const auto& s : f.sub) n += count_kind(s, kind);
  return n;
}

// ---------------------------------------------------------------------------

namespace {

std::string_view keyword(K kind) {
  switch (kind) {
    case K::kFOEq: return "=";
    case K::kSucc: return "S";
    case K::kLt: return "<";
    case K::kLetter: return "letter";
    case K::kSetMem: return "in";
    case K::kNot: return "not";
    case K::kAnd: return "and";
    case K::kOr: return "or";
    case K::kImplies: return "->";
    case K::kExistsFO: return "exists1";
    case K::kForallFO: return "forall1";
    case K::kExistsSO: return "exists2";
    case K::kForallSO: return "forall2";
  }
  return "?";
}

void render_into(const Formula& f, std::string& out) {
  out += '(';
  out += keyword(f.kind);
  switch (f.kind) {
    case K::kFOEq:
    case K::kSucc:
    case K::kLt:
    case K::kLetter:
    case K::kSetMem:
      out += ' ' + f.a + ' ' + f.b;
      break;
    case K::kExistsFO:
    case K::kForallFO:
    case K::kExistsSO:
    case K::kForallSO:
      out += ' ' + f.a;
      [[fallthrough]];
    default:
      for (const auto& s : f.sub) {
        out += ' ';
        render_into(s, out);
      }
  }
  out += ')';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = formula();
    skip_space();
    if (pos_ != text_.size()) fail("trailing text after formula");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(1, pos_ + 1, what); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }
  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  // A run of non-space characters, stopping at ')' unless `to_space`.
  std::string word(bool to_space = false) {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) == 0 &&
           (to_space || (text_[pos_] != ')' && text_[pos_] != '(')))
      ++pos_;
    if (pos_ == start) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }
  bool at_close() {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == ')';
  }

  Formula formula() {
    expect('(');
    const std::string op = word();
    Formula f;
    if (op == "=" || op == "S" || op == "<" || op == "in") {
      f.kind = op == "=" ? K::kFOEq : op == "S" ? K::kSucc : op == "<" ? K::kLt : K::kSetMem;
      f.a = word();
      f.b = word();
    } else if (op == "letter") {
      f.kind = K::kLetter;
      f.a = word(true);  // symbols may contain parentheses; a space always follows
      f.b = word();
    } else if (op == "not" || op == "->") {
      f.kind = op == "not" ? K::kNot : K::kImplies;
      const std::size_t arity = f.kind == K::kNot ? 1 : 2;
      for (std::size_t i = 0; i < arity; ++i) f.sub.push_back(formula());
    } else if (op == "and" || op == "or") {
      f.kind = op == "and" ? K::kAnd : K::kOr;
      while (!at_close()) f.sub.push_back(formula());
    } else if (op == "exists1" || op == "forall1" || op == "exists2" || op == "forall2") {
      f.kind = op == "exists1" ? K::kExistsFO
               : op == "forall1" ? K::kForallFO
               : op == "exists2" ? K::kExistsSO
                                 : K::kForallSO;
      f.a = word();
      f.sub.push_back(formula());
    } else {
      fail("unknown operator '" + op + "'");
    }
    expect(')');
    return f;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

Formula parse_formula(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace omega::mso
