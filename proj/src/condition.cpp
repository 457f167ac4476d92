// condition.cpp

#include "omega/condition.hpp"

#include <sstream>

namespace omega {

std::string_view to_string(StatKind kind) {
  switch (kind) {
    case StatKind::kRun: return "run";
    case StatKind::kInf: return "inf";
    case StatKind::kFin: return "fin";
    case StatKind::kNinf: return "ninf";
  }
  return "?";
}

std::string_view to_string(Rel rel) {
  switch (rel) {
    case Rel::kMeets: return "meets";
    case Rel::kSubseteq: return "subseteq";
    case Rel::kEq: return "eq";
  }
  return "?";
}

std::string_view to_string(NamedCondition name) {
  switch (name) {
    case NamedCondition::kA: return "A";
    case NamedCondition::kAprime: return "Aprime";
    case NamedCondition::kL: return "L";
    case NamedCondition::kLprime: return "Lprime";
  }
  return "?";
}

const std::vector<Condition>& Condition::all() {
  static const std::vector<Condition> conditions = [] {
    std::vector<Condition> out;
    for (auto k : {StatKind::kRun, StatKind::kInf, StatKind::kFin, StatKind::kNinf})
      for (auto r : {Rel::kMeets, Rel::kSubseteq, Rel::kEq}) out.push_back(pair(k, r));
    for (auto n : {NamedCondition::kA, NamedCondition::kAprime, NamedCondition::kL,
                   NamedCondition::kLprime})
      out.push_back(named(n));
    return out;
  }();
  return conditions;
}

std::optional<Condition> Condition::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  for (const auto& c : all()) {
    if (c.is_pair() && words.size() == 2 && words[0] == omega::to_string(c.kind()) &&
        words[1] == omega::to_string(c.rel()))
      return c;
    if (!c.is_pair() && words.size() == 1 && words[0] == omega::to_string(c.name())) return c;
  }
  return std::nullopt;
}

std::string Condition::to_string() const {
  if (!is_pair_) return std::string(omega::to_string(name_));
  return std::string(omega::to_string(kind_)) + " " + std::string(omega::to_string(rel_));
}

}  // namespace omega
