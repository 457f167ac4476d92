// transforms.hpp -- language-preserving rewrites between acceptance conditions
//
// Each function documents the condition it reads its input under and the
// condition its output is meant for. Constructed states are named from their
// components: pairs "p·q", visited sets "q·[s1,s2]", counters "q·3", and
// synchronous products "(s1,s2)". Fresh sink states are "⊥", "⊥'", with
// extra primes if a name is taken.

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "omega/condition.hpp"
#include "omega/core.hpp"
#include "omega/limits.hpp"
#include "omega/words.hpp"

namespace omega {

/// A and (run, meets): product with the visited set.
Automaton a_to_run_meets(const Automaton& a, const Limits& limits = default_limits());
/// (run, meets) to A: table of singletons of ∪𝓕.
Automaton run_meets_to_a(const Automaton& a);
/// Aprime to (run, subseteq), with a sink ⊥ entered once every F is covered.
Automaton aprime_to_run_subseteq(const Automaton& a, const Limits& limits = default_limits());
/// (run, subseteq) to Aprime, with ⊥ entered once no F contains the visited set.
Automaton run_subseteq_to_aprime(const Automaton& a, const Limits& limits = default_limits());
/// {Q ∖ F : F ∈ 𝓕}. Maps L ↔ (ninf, subseteq), Lprime ↔ (ninf, meets),
/// (inf, eq) ↔ (ninf, eq).
Automaton complement_table(const Automaton& a);

/// True if sink completion preserves the language under `cond`.
bool add_sink_sound(const Automaton& a, const Condition& cond);
/// Completes `a` with a fresh sink. Identity on complete input. Throws
/// PreconditionError for conditions where a sink changes the language.
Automaton add_sink(const Automaton& a, const Condition& cond);

/// (inf, meets) to L: table of singletons of ∪𝓕.
Automaton inf_meets_to_L(const Automaton& a);
/// L to (inf, meets) on complete deterministic input.
Automaton L_to_inf_meets(const Automaton& a, const Limits& limits = default_limits());
/// Lprime to Lprime with a table {{f}}.
Automaton single_accepting_Lprime(const Automaton& a, const Limits& limits = default_limits());
/// Lprime with table {{f}} to (inf, subseteq) with table {Q ∖ {f}}.
Automaton lprime_to_inf_subseteq(const Automaton& a);
/// Completion for (fin, subseteq) and (fin, eq) with fresh ⊥ → ⊥' → ⊥'.
Automaton complete_for_fin(const Automaton& a);
/// (fin, subseteq) to (fin, eq): downward closure of the table.
Automaton fin_subseteq_to_fin_eq(const Automaton& a, const Limits& limits = default_limits());
/// (fin, meets) to (fin, eq): every subset of Q meeting ∪𝓕.
Automaton fin_meets_to_fin_eq(const Automaton& a, const Limits& limits = default_limits());
/// (inf, meets) to (fin, eq) over Q ∪ Q×Q, plus a fresh start state when the
/// initial state lies in ∪𝓕.
Automaton inf_meets_to_fin_eq(const Automaton& a, const Limits& limits = default_limits());

/// Union / intersection tree over (automaton, condition) leaves.
struct LanguageExpr {
  enum class Kind { kLeaf, kUnion, kIntersection };
  Kind kind = Kind::kLeaf;
  std::shared_ptr<const Automaton> automaton;
  Condition cond = cond::buchi();
  std::vector<LanguageExpr> children;

  static LanguageExpr leaf(Automaton a, Condition c);
  static LanguageExpr join(Kind kind, std::vector<LanguageExpr> children);
  std::size_t leaf_count() const;
};

/// (fin, subseteq) on deterministic input to a union of intersections of
/// (run, subseteq) and (inf, meets) leaves.
LanguageExpr dfa_fin_subseteq_decompose(const Automaton& a,
                                        const Limits& limits = default_limits());

bool expr_accepts(const LanguageExpr& e, const LassoWord& w);

/// Text form: (union …), (inter …) and (leaf COND SET…) with COND written
/// with '-' for the space, e.g. (leaf run-subseteq {q0 q1}).
std::string render_expr(const LanguageExpr& e);

// ---------------------------------------------------------------------------
// Named registry used by the command line.

struct TransformOutcome {
  std::optional<Automaton> automaton;  // absent for the decomposition
  std::optional<LanguageExpr> expr;
  Condition cond = cond::buchi();
};

struct TransformInfo {
  std::string name;
  std::string source;  // human-readable input condition
  std::string target;
  std::function<TransformOutcome(const Automaton&, const Condition&)> apply;
};

const std::vector<TransformInfo>& transform_registry();
const TransformInfo* find_transform(std::string_view name);

}  // namespace omega
