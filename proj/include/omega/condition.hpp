// condition.hpp -- the acceptance-condition vocabulary
//
// A condition is either a pair (statistic, relation) or one of the four named
// conditions A, A', L, L'. Text forms are "run meets", "fin eq", "Lprime", ...

#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace omega {

enum class StatKind { kRun, kInf, kFin, kNinf };
enum class Rel { kMeets, kSubseteq, kEq };
enum class NamedCondition { kA, kAprime, kL, kLprime };

std::string_view to_string(StatKind kind);
std::string_view to_string(Rel rel);
std::string_view to_string(NamedCondition name);

class Condition {
 public:
  static Condition pair(StatKind kind, Rel rel) { return Condition(kind, rel); }
  static Condition named(NamedCondition name) { return Condition(name); }

  /// The 12 pairs in (run, inf, fin, ninf) × (meets, subseteq, eq) order
  /// followed by A, Aprime, L, Lprime.
  static const std::vector<Condition>& all();

  /// Accepts "KIND REL" (single spaces or any whitespace) or a named condition.
  static std::optional<Condition> parse(std::string_view text);

  bool is_pair() const { return is_pair_; }
  StatKind kind() const { return kind_; }
  Rel rel() const { return rel_; }
  NamedCondition name() const { return name_; }

  std::string to_string() const;

  friend bool operator==(const Condition& a, const Condition& b) {
    if (a.is_pair_ != b.is_pair_) return false;
    return a.is_pair_ ? (a.kind_ == b.kind_ && a.rel_ == b.rel_) : a.name_ == b.name_;
  }

 private:
  Condition(StatKind kind, Rel rel) : is_pair_(true), kind_(kind), rel_(rel) {}
  explicit Condition(NamedCondition name) : is_pair_(false), name_(name) {}

  bool is_pair_ = true;
  StatKind kind_ = StatKind::kRun;
  Rel rel_ = Rel::kMeets;
  NamedCondition name_ = NamedCondition::kA;
};

// Shorthands used throughout the library and tests.
namespace cond {
inline Condition buchi() { return Condition::pair(StatKind::kInf, Rel::kMeets); }
inline Condition muller() { return Condition::pair(StatKind::kInf, Rel::kEq); }
inline Condition A() { return Condition::named(NamedCondition::kA); }
inline Condition Aprime() { return Condition::named(NamedCondition::kAprime); }
inline Condition L() { return Condition::named(NamedCondition::kL); }
inline Condition Lprime() { return Condition::named(NamedCondition::kLprime); }
}  // namespace cond

}  // namespace omega
