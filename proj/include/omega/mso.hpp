// mso.hpp -- monadic second-order formulas describing an automaton's language
//
// Formulas are plain trees. First-order variables are named x, y; the
// second-order variable of state number i is X<i>. Rendering is a prefix
// syntax that parse_formula() reads back.

#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "omega/condition.hpp"
#include "omega/core.hpp"

namespace omega::mso {

struct Formula {
  enum class Kind {
    kFOEq,      // (= x y)
    kSucc,      // (S x y)
    kLt,        // (< x y)
    kLetter,    // (letter a x)
    kSetMem,    // (in X x)
    kNot,       // (not φ)
    kAnd,       // (and φ…), empty = true
    kOr,        // (or φ…), empty = false
    kImplies,   // (-> φ ψ)
    kExistsFO,  // (exists1 x φ)
    kForallFO,  // (forall1 x φ)
    kExistsSO,  // (exists2 X φ)
    kForallSO,  // (forall2 X φ)
  };
  Kind kind = Kind::kAnd;
  std::string a;  // first variable, bound variable, or letter
  std::string b;  // second variable
  std::vector<Formula> sub;

  friend bool operator==(const Formula&, const Formula&) = default;
};

Formula fo_eq(std::string x, std::string y);
Formula succ(std::string x, std::string y);
Formula lt(std::string x, std::string y);
Formula letter(std::string sym, std::string x);
Formula set_mem(std::string set, std::string x);
Formula negate(Formula f);
Formula conj(std::vector<Formula> fs);
Formula disj(std::vector<Formula> fs);
Formula implies(Formula f, Formula g);
Formula exists1(std::string x, Formula f);
Formula forall1(std::string x, Formula f);
Formula exists2(std::string x, Formula f);
Formula forall2(std::string x, Formula f);

std::set<std::string> free_vars(const Formula& f);

/// C(X): "state X is in the statistic `kind` of the encoded path".
Formula c_formula(StatKind kind, const std::string& set_var);

/// The acceptance part for a pair condition; `vars[i]` names state i's set.
Formula cond_formula(StatKind kind, Rel rel, const AcceptanceTable& table,
                     const std::vector<std::string>& vars);

/// Closed formula for a pair condition. Throws PreconditionError for named
/// conditions.
Formula automaton_formula(const Automaton& a, const Condition& cond);

/// Rewrites a named condition to a pair condition with the matching
/// transform, so automaton_formula applies. Pairs pass through.
std::pair<Automaton, Condition> to_pair_condition(const Automaton& a, const Condition& cond);

std::size_t count_kind(const Formula& f, Formula::Kind kind);

std::string render(const Formula& f);
/// Throws ParseError.
Formula parse_formula(std::string_view text);

}  // namespace omega::mso
