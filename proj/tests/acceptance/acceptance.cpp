// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.
//
//   acceptance            run all criteria
//   acceptance 2 4        run a selection

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../support/corpus.hpp"
#include "../support/helpers.hpp"
#include "../support/oracle.hpp"
#include "omega/buchi.hpp"
#include "omega/error.hpp"
#include "omega/format.hpp"
#include "omega/mso.hpp"
#include "omega/semantics.hpp"
#include "omega/transforms.hpp"
#include "omega/witnesses.hpp"

using namespace omega;
using namespace omega::testing;

namespace {

using SK = StatKind;
Condition P(SK k, Rel r) { return Condition::pair(k, r); }

struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;
  std::vector<std::string> notes;

  bool expect(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (!ok) {
      if (failures == 0) first_failure = describe();
      ++failures;
    }
    return ok;
  }
};

std::string word_text(const Automaton& a, const LassoWord& w) { return format_word(a.alphabet(), w); }

std::vector<Condition> all_conditions() {
  std::vector<Condition> out;
  for (auto k : {SK::kRun, SK::kInf, SK::kFin, SK::kNinf})
    for (auto r : {Rel::kMeets, Rel::kSubseteq, Rel::kEq}) out.push_back(P(k, r));
  for (auto c : {cond::A(), cond::Aprime(), cond::L(), cond::Lprime()}) out.push_back(c);
  return out;
}

const std::vector<LassoWord>& words33() {
  static const auto w = enumerate_lassos(2, 3, 3);
  return w;
}

// Library bounded_equiv plus a direct comparison with the brute-force oracle
// on `reference`, an automaton with the source language (often src itself).
void check_language(Tally& t, const std::string& label, const Automaton& reference,
                    const Automaton& src, const Condition& c1, const Automaton& dst,
                    const Condition& c2) {
  auto r = bounded_equiv(src, c1, dst, c2, 3, 3);
  if (!t.expect(r.equal, [&] {
        return label + ": bounded_equiv counterexample " + word_text(src, r.word) + " (source " +
               (r.in1 ? "accepts" : "rejects") + ")\n" + serialize_document(src, c1);
      }))
    return;
  for (const auto& w : words33()) {
    const bool in1 = brute_accepts(reference, c1, w);
    const bool in2 = accepts(dst, c2, w);
    if (!t.expect(in1 == in2, [&] { return label + ": oracle disagrees on " + word_text(src, w); }))
      return;
  }
}

void check_structure(Tally& t, const std::string& label, const Automaton& src, const Automaton& dst,
                     bool keeps_det, bool keeps_complete) {
  if (keeps_det && is_deterministic(src))
    t.expect(is_deterministic(dst), [&] { return label + ": determinism lost"; });
  if (keeps_complete && is_complete(src))
    t.expect(is_complete(dst), [&] { return label + ": completeness lost"; });
}

// ---------------------------------------------------------------------------

Tally criterion1() {
  Tally t;
  for (auto id : {FigureId::kFig2, FigureId::kFig3, FigureId::kFig4, FigureId::kFig5}) {
    auto r = verify_figure(id, 4, 4);
    t.expect(r.equal, [&] {
      return std::string(to_string(id)) + " differs on " + format_word(Alphabet({"a", "b"}), r.word);
    });
  }
  return t;
}

struct Regime {
  std::string transform;
  CorpusShape shape;
  std::vector<Condition> sources;
  bool keeps_det = true;
  bool keeps_complete = true;
  bool makes_complete = false;
  // Adapts a corpus automaton to the transform's precondition.
  std::function<Automaton(const Automaton&)> prepare = [](const Automaton& a) { return a; };
  // prepare keeps the language, so the oracle may read the smaller raw input.
  bool oracle_on_raw = false;
};

std::vector<Regime> regimes() {
  const CorpusShape any{};
  CorpusShape cdfa{};
  cdfa.deterministic = true;
  cdfa.complete = true;
  CorpusShape dfa{};
  dfa.deterministic = true;
  CorpusShape buchi{};
  buchi.max_sets = 1;
  const Condition fin_sub = P(SK::kFin, Rel::kSubseteq);
  std::vector<Regime> r;
  r.push_back({"a-to-run-meets", any, {cond::A()}});
  r.push_back({"run-meets-to-a", any, {P(SK::kRun, Rel::kMeets)}});
  r.push_back({"aprime-to-run-subseteq", any, {cond::Aprime()}});
  r.push_back({"run-subseteq-to-aprime", any, {P(SK::kRun, Rel::kSubseteq)}});
  r.push_back({"complement-table", any,
               {cond::L(), P(SK::kNinf, Rel::kSubseteq), P(SK::kInf, Rel::kEq), P(SK::kNinf, Rel::kEq)}});
  // Conditions under which a sink is sound; the cycle avoids L with ∅ ∈ 𝓕
  // by construction in prepare.
  Regime sink{"add-sink", any,
              {P(SK::kInf, Rel::kMeets), P(SK::kInf, Rel::kSubseteq), P(SK::kInf, Rel::kEq),
               P(SK::kRun, Rel::kSubseteq), P(SK::kRun, Rel::kEq), cond::L()}};
  sink.makes_complete = true;
  sink.prepare = [](const Automaton& a) {
    std::vector<StateSet> keep;
    for (const auto& s : a.table().sets())
      if (!s.empty()) keep.push_back(s);
    return a.with_table(AcceptanceTable(a.num_states(), keep));
  };
  r.push_back(sink);
  r.push_back({"inf-meets-to-L", any, {P(SK::kInf, Rel::kMeets)}});
  r.push_back({"L-to-inf-meets", cdfa, {cond::L()}});
  r.push_back({"single-accepting-Lprime", any, {cond::Lprime()}});
  Regime lp{"lprime-to-inf-subseteq", any, {cond::Lprime()}};
  lp.prepare = [](const Automaton& a) { return single_accepting_Lprime(a); };
  lp.oracle_on_raw = true;
  r.push_back(lp);
  Regime cf{"complete-for-fin", any, {fin_sub, P(SK::kFin, Rel::kEq)}};
  cf.makes_complete = true;
  r.push_back(cf);
  r.push_back({"fin-subseteq-to-fin-eq", any, {fin_sub}});
  r.push_back({"fin-meets-to-fin-eq", any, {P(SK::kFin, Rel::kMeets)}});
  // The Q ∪ Q×Q construction adds guessing edges; only completeness carries over.
  r.push_back({"inf-meets-to-fin-eq", buchi, {P(SK::kInf, Rel::kMeets)}, false, true});
  r.push_back({"dfa-fin-subseteq-decompose", dfa, {fin_sub}});
  return r;
}

void run_regime(Tally& t, const Regime& reg, std::size_t count, std::uint64_t seed) {
  const TransformInfo* info = find_transform(reg.transform);
  if (!t.expect(info != nullptr, [&] { return "missing transform " + reg.transform; })) return;
  Corpus corpus(seed);
  std::size_t i = 0;
  for (const auto& raw : corpus.take(count, reg.shape)) {
    const Automaton src = reg.prepare(raw);
    const Condition c1 = reg.sources[i++ % reg.sources.size()];
    const std::string label = reg.transform + " #" + std::to_string(i) + " under " + c1.to_string();
    TransformOutcome out;
    try {
      out = info->apply(src, c1);
    } catch (const Error& e) {
      t.expect(false, [&] { return label + ": threw " + e.what(); });
      continue;
    }
    if (out.expr) {
      for (const auto& w : words33())
        if (!t.expect(expr_accepts(*out.expr, w) == brute_accepts(reg.oracle_on_raw ? raw : src, c1, w),
                      [&] { return label + ": expression disagrees on " + word_text(src, w); }))
          break;
      continue;
    }
    check_language(t, label, reg.oracle_on_raw ? raw : src, src, c1, *out.automaton, out.cond);
    check_structure(t, label, src, *out.automaton, reg.keeps_det, reg.keeps_complete);
    if (reg.makes_complete)
      t.expect(is_complete(*out.automaton), [&] { return label + ": result not complete"; });
  }
}

Tally criterion2() {
  Tally t;
  std::uint64_t seed = 2000;
  for (const auto& reg : regimes()) {
    const auto start = std::chrono::steady_clock::now();
    run_regime(t, reg, 200, ++seed);
    std::ostringstream note;
    note.precision(2);
    note << reg.transform << ": " << std::fixed
         << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() << " s";
    if (std::getenv("OMEGA_ACCEPTANCE_VERBOSE")) std::cerr << note.str() << std::endl;
  }
  return t;
}

Tally criterion3() {
  Tally t;
  const std::vector<std::pair<Condition, Condition>> duals = {
      {cond::L(), P(SK::kNinf, Rel::kSubseteq)},
      {cond::Lprime(), P(SK::kNinf, Rel::kMeets)},
      {P(SK::kInf, Rel::kEq), P(SK::kNinf, Rel::kEq)}};
  Corpus corpus(3000);
  std::vector<std::size_t> failures(duals.size(), 0);
  std::vector<std::string> first(duals.size());
  for (const auto& a : corpus.take(200, CorpusShape{})) {
    const Automaton b = complement_table(a);
    t.expect(complement_table(b) == a, [] { return std::string("involution broken"); });
    for (std::size_t d = 0; d < duals.size(); ++d) {
      const auto& [x, y] = duals[d];
      for (const auto& [src, c1, dst, c2] :
           {std::tuple{a, x, b, y}, std::tuple{a, y, b, x}}) {
        auto r = bounded_equiv(src, c1, dst, c2, 3, 3);
        const std::string label = c1.to_string() + " vs complemented " + c2.to_string();
        if (!r.equal && failures[d]++ == 0)
          first[d] = label + " differs on " + word_text(a, r.word) + "\n" + serialize_document(a, c1);
        t.expect(r.equal, [&] { return label + ": counterexample " + word_text(a, r.word); });
      }
    }
  }
  // Informational: the relation that does hold for Lprime, on the same table.
  std::size_t same_table_failures = 0;
  Corpus again(3000);
  for (const auto& a : again.take(200, CorpusShape{}))
    if (!bounded_equiv(a, cond::Lprime(), a, P(SK::kNinf, Rel::kMeets), 3, 3).equal) ++same_table_failures;
  for (std::size_t d = 0; d < duals.size(); ++d)
    t.notes.push_back(duals[d].first.to_string() + " <-> " + duals[d].second.to_string() + ": " +
                      (failures[d] == 0 ? "holds" : std::to_string(failures[d]) + " failing cases"));
  t.notes.push_back("note: Lprime equals ninf meets on the unchanged table in " +
                    std::to_string(200 - same_table_failures) + " of 200 cases (F not within inf iff F meets ninf)");
  return t;
}

Tally criterion4() {
  Tally t;
  CorpusShape shape{};
  shape.max_states = 3;
  Corpus corpus(4000);
  const auto conds = all_conditions();
  for (const auto& a : corpus.take(100, shape)) {
    for (const auto& c : conds) {
      const Automaton b = to_buchi(a, c);
      t.expect(b.table().size() == 1, [&] { return "to_buchi table is not a single set"; });
      auto r = bounded_equiv(a, c, b, cond::buchi(), 3, 3);
      t.expect(r.equal, [&] {
        return "to_buchi under " + c.to_string() + " differs on " + word_text(a, r.word) + "\n" +
               serialize_document(a, c);
      });
    }
  }
  return t;
}

Tally criterion5() {
  Tally t;
  Regime reg{"inf-meets-to-fin-eq", CorpusShape{}, {P(SK::kInf, Rel::kMeets)}, false, true};
  reg.shape.max_states = 3;
  reg.shape.max_sets = 1;
  run_regime(t, reg, 200, 5000);
  Corpus corpus(5001);
  for (const auto& a : corpus.take(50, reg.shape)) {
    const auto n = a.num_states();
    const std::size_t start = a.table().support().contains(a.initial()) ? 1 : 0;
    t.expect(inf_meets_to_fin_eq(a).num_states() == n + n * n + start,
             [] { return std::string("state count"); });
  }
  return t;
}

Tally criterion6() {
  Tally t;
  CorpusShape shape{};
  shape.max_states = 3;
  shape.deterministic = true;
  Corpus corpus(6000);
  for (const auto& a : corpus.take(100, shape)) {
    const auto e = dfa_fin_subseteq_decompose(a);
    for (const auto& w : words33())
      if (!t.expect(expr_accepts(e, w) == brute_accepts(a, P(SK::kFin, Rel::kSubseteq), w), [&] {
            return "decomposition differs on " + word_text(a, w) + "\n" + serialize_document(a, cond::L());
          }))
        break;
  }
  return t;
}

Tally criterion7() {
  Tally t;
  Corpus corpus(7000);
  const auto conds = all_conditions();
  for (const auto& a : corpus.take(200, CorpusShape{})) {
    for (const auto& c : conds) {
      const auto [b, pc] = mso::to_pair_condition(a, c);
      const auto phi = mso::automaton_formula(b, pc);
      t.expect(mso::free_vars(phi).empty(), [&] { return "free variables under " + c.to_string(); });
      const std::size_t so = mso::count_kind(phi, mso::Formula::Kind::kExistsSO) +
                             mso::count_kind(phi, mso::Formula::Kind::kForallSO);
      t.expect(so == b.num_states(), [&] { return "quantifier count under " + c.to_string(); });
    }
  }
  const auto f2 = figure_automaton(FigureId::kFig2).automaton;
  const auto c = P(SK::kNinf, Rel::kMeets);
  const std::string first = mso::render(mso::automaton_formula(f2, c));
  const std::string second = mso::render(mso::automaton_formula(f2, c));
  t.expect(first == second, [] { return std::string("rendering not stable"); });
  t.expect(first + "\n" == slurp(std::string(OMEGA_GOLDEN_DIR) + "/fig2_ninf_meets.mso"),
           [] { return std::string("golden rendering differs"); });
  return t;
}

Tally criterion8() {
  Tally t;
  Corpus corpus(8000);
  auto phase = [](const LassoWord& w, std::size_t i) {
    return i < w.stem.size() ? i : w.stem.size() + (i - w.stem.size()) % w.cycle.size();
  };
  for (const auto& a : corpus.take(100, CorpusShape{})) {
    for (const auto& w : words33()) {
      const auto sws = run_summaries_with_witnesses(a, w);
      std::set<BruteSummary> lib;
      for (const auto& sw : sws) {
        const auto& s = sw.summary;
        t.expect(s.inf.subset_of(s.run) && !s.inf.empty(),
                 [&] { return "summary violates inf ⊆ run on " + word_text(a, w); });
        lib.insert({mask_of(s.run), mask_of(s.inf)});
        const auto& p = sw.path;
        bool ok = !p.prefix.empty() && !p.cycle.empty() && p.prefix.front() == a.initial() &&
                  p.cycle.back() == p.prefix.back() &&
                  phase(w, p.prefix.size() - 1) == phase(w, p.prefix.size() - 1 + p.cycle.size());
        std::vector<StateIndex> path = p.prefix;
        for (int r = 0; ok && r < 3; ++r) path.insert(path.end(), p.cycle.begin(), p.cycle.end());
        StateSet run(a.num_states()), inf(a.num_states());
        for (std::size_t i = 0; ok && i + 1 < path.size(); ++i) {
          const auto succ = a.successors(path[i], letter_at(w, i));
          ok = std::find(succ.begin(), succ.end(), path[i + 1]) != succ.end();
          run.insert(path[i + 1]);
        }
        for (auto q : p.cycle) inf.insert(q);
        ok = ok && run == s.run && inf == s.inf;
        t.expect(ok, [&] { return "witness does not replay on " + word_text(a, w); });
      }
      t.expect(lib == brute_summaries(a, w), [&] { return "summaries differ from brute force on " + word_text(a, w); });
    }
  }
  return t;
}

Tally criterion9() {
  Tally t;
  auto round_trip = [&](const AutomatonDocument& d, const std::string& label) {
    const std::string text = serialize_document(d);
    try {
      const auto back = parse_document(text);
      t.expect(back.automaton == d.automaton && back.condition == d.condition,
               [&] { return label + ": round trip changed the document"; });
      t.expect(serialize_document(back) == text, [&] { return label + ": output not canonical"; });
    } catch (const Error& e) {
      t.expect(false, [&] { return label + ": " + e.what(); });
    }
  };
  Corpus corpus(9000);
  const auto conds = all_conditions();
  std::size_t i = 0;
  for (const auto& a : corpus.take(300, CorpusShape{})) {
    round_trip({a, conds[i % conds.size()]}, "corpus #" + std::to_string(i));
    ++i;
  }
  for (auto id : {FigureId::kFig2, FigureId::kFig3, FigureId::kFig4, FigureId::kFig5}) {
    const auto f = figure_automaton(id);
    round_trip({f.automaton, f.cond}, std::string(to_string(id)));
  }
  t.expect(serialize_document(figure_automaton(FigureId::kFig5).automaton, figure_automaton(FigureId::kFig5).cond) ==
               slurp(std::string(OMEGA_GOLDEN_DIR) + "/fig5.oaut"),
           [] { return std::string("fig5 golden file differs"); });
  const std::string base = "alphabet a\nstate q0 init\ntrans q0 a q0\n";
  const auto none = parse_document(base + "table -\ncond L\n");
  const auto empty_set = parse_document(base + "table {}\ncond L\n");
  t.expect(none.automaton.table().size() == 0 && empty_set.automaton.table().size() == 1 &&
               serialize_document(none) != serialize_document(empty_set),
           [] { return std::string("'table -' and 'table {}' not distinguished"); });
  return t;
}

Tally criterion10() {
  Tally t;
  CorpusShape shape{};
  shape.max_sets = 1;
  Corpus corpus(10000);
  std::size_t nonempty = 0;
  for (const auto& raw : corpus.take(200, shape)) {
    // Büchi automata carry exactly one accepting set.
    const Automaton a = raw.table().empty() ? raw.with_table(AcceptanceTable(raw.num_states(), {StateSet(raw.num_states())}))
                                            : raw;
    const auto report = is_empty(a);
    const std::size_t bound = a.num_states();
    bool found = false;
    for_each_lasso(2, bound, bound, [&](const LassoWord& w) {
      found = brute_accepts(a, cond::buchi(), w);
      return !found;
    });
    t.expect(report.empty == !found, [&] {
      return std::string("is_empty says ") + (report.empty ? "empty" : "nonempty") + "\n" +
             serialize_document(a, cond::buchi());
    });
    if (!report.empty) {
      ++nonempty;
      t.expect(report.witness.has_value() && brute_accepts(a, cond::buchi(), *report.witness),
               [&] { return "witness rejected\n" + serialize_document(a, cond::buchi()); });
    }
  }
  t.notes.push_back(std::to_string(nonempty) + " of 200 nonempty");
  return t;
}

struct Criterion {
  int id;
  const char* title;
  Tally (*run)();
};

const Criterion kCriteria[] = {
    {1, "figure fidelity at (4,4)", criterion1},
    {2, "transform soundness", criterion2},
    {3, "duality laws", criterion3},
    {4, "uniform Büchi pipeline", criterion4},
    {5, "Q ∪ Q×Q construction", criterion5},
    {6, "DFA(fin,subseteq) decomposition", criterion6},
    {7, "MSO emitter", criterion7},
    {8, "oracle self-consistency", criterion8},
    {9, "format round trip", criterion9},
    {10, "emptiness", criterion10},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  std::vector<int> selected;
  app.add_option("CRITERIA", selected, "Criterion numbers to run (default: all)");
  CLI11_PARSE(app, argc, argv);

  int failed = 0;
  for (const auto& c : kCriteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Tally t;
    try {
      t = c.run();
    } catch (const std::exception& e) {
      t.expect(false, [&] { return std::string("uncaught: ") + e.what(); });
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.id == 1 && secs >= 60.0) t.expect(false, [] { return std::string("took 60 s or more"); });
    std::ostringstream line;
    line << "criterion " << c.id << " (" << c.title << "): " << (t.failures == 0 ? "PASS" : "FAIL") << " ["
         << t.checks - t.failures << "/" << t.checks << " checks, " << std::fixed;
    line.precision(2);
    line << secs << " s]";
    std::cout << line.str() << "\n";
    for (const auto& n : t.notes) std::cout << "    " << n << "\n";
    if (t.failures != 0) {
      std::cout << "    first failure: " << t.first_failure << "\n";
      ++failed;
    }
    std::cout.flush();
  }
  return failed == 0 ? 0 : 1;
}
