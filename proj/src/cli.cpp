// cli.cpp

#include "omega/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

#include "omega/buchi.hpp"
#include "omega/error.hpp"
#include "omega/format.hpp"
#include "omega/mso.hpp"
#include "omega/semantics.hpp"
#include "omega/transforms.hpp"
#include "omega/witnesses.hpp"

namespace omega::cli {

namespace {

Condition condition_or(const std::vector<std::string>& words, const Condition& fallback) {
  if (words.empty()) return fallback;
  std::string text;
  for (const auto& w : words) text += (text.empty() ? "" : " ") + w;
  std::replace(text.begin(), text.end(), '-', ' ');
  std::replace(text.begin(), text.end(), '_', ' ');
  auto c = Condition::parse(text);
  if (!c) throw Error("unknown condition '" + text + "'");
  return *c;
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_text_file(path, text);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Automata on infinite words under parameterized acceptance conditions", "omega"};
  app.require_subcommand(1);

  std::string file, file2, word, name, output, figure;
  std::vector<std::string> cond_words;
  std::size_t stem_max = 3, cycle_max = 3;
  bool check = false;

  auto add_cond = [&](CLI::App* sub) {
    sub->add_option("--cond", cond_words, "Condition overriding the file's cond line, e.g. 'fin eq'")
        ->expected(1, 2);
  };

  auto* info = app.add_subcommand("info", "Print structural facts about an automaton");
  info->add_option("FILE", file)->required();

  auto* acc = app.add_subcommand("accepts", "Decide membership of a lasso word STEM:CYCLE");
  acc->add_option("FILE", file)->required();
  acc->add_option("--word", word, "Word as STEM:CYCLE")->required();
  add_cond(acc);

  auto* tr = app.add_subcommand("transform", "Apply a named rewrite");
  tr->add_option("NAME", name)->required();
  tr->add_option("FILE", file)->required();
  tr->add_option("-o,--output", output, "Output file (default: standard output)");
  add_cond(tr);

  auto* tb = app.add_subcommand("to-buchi", "Translate to a Büchi automaton");
  tb->add_option("FILE", file)->required();
  tb->add_option("-o,--output", output, "Output file (default: standard output)");
  add_cond(tb);

  auto* em = app.add_subcommand("empty", "Check emptiness; print a witness if nonempty");
  em->add_option("FILE", file)->required();
  add_cond(em);

  auto* eq = app.add_subcommand("equiv", "Compare two automata on all bounded lasso words");
  eq->add_option("FILE1", file)->required();
  eq->add_option("FILE2", file2)->required();
  eq->add_option("--stem-max", stem_max, "Largest stem length")->capture_default_str();
  eq->add_option("--cycle-max", cycle_max, "Largest cycle length")->capture_default_str();

  auto* ms = app.add_subcommand("emit-mso", "Print the closed MSO formula of the language");
  ms->add_option("FILE", file)->required();
  add_cond(ms);

  auto* wi = app.add_subcommand("witness", "Print or check one of fig2, fig3, fig4, fig5");
  wi->add_option("FIGURE", figure)->required();
  wi->add_flag("--check", check, "Compare against the language predicate");
  std::size_t w_stem = 4, w_cycle = 4;
  wi->add_option("--stem-max", w_stem, "Largest stem length")->capture_default_str();
  wi->add_option("--cycle-max", w_cycle, "Largest cycle length")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitTrue;
  } catch (const CLI::ParseError& e) {
    std::string what = e.what();
    what.erase(std::remove(what.begin(), what.end(), '\n'), what.end());
    err << "omega: " << what << "\n";
    return kExitError;
  }

  try {
    if (info->parsed()) {
      const auto doc = read_document_file(file);
      const auto& a = doc.automaton;
      out << "states: " << a.num_states() << "\n";
      out << "transitions: " << a.transitions().size() << "\n";
      out << "deterministic: " << yes_no(is_deterministic(a)) << "\n";
      out << "complete: " << yes_no(is_complete(a)) << "\n";
      out << "table: " << a.table().size() << " set" << (a.table().size() == 1 ? "" : "s");
      for (const auto& s : a.table().sets()) out << " " << format_set(a, s);
      out << "\ncond: " << doc.condition.to_string() << "\n";
      return kExitTrue;
    }
    if (acc->parsed()) {
      const auto doc = read_document_file(file);
      const Condition c = condition_or(cond_words, doc.condition);
      const LassoWord w = parse_word(doc.automaton.alphabet(), word);
      const bool yes = accepts(doc.automaton, c, w);
      out << yes_no(yes) << "\n";
      return yes ? kExitTrue : kExitFalse;
    }
    if (tr->parsed()) {
      const TransformInfo* t = find_transform(name);
      if (t == nullptr) throw Error("unknown transform '" + name + "'");
      const auto doc = read_document_file(file);
      const Condition c = condition_or(cond_words, doc.condition);
      const TransformOutcome result = t->apply(doc.automaton, c);
      if (result.expr)
        emit(output, "expr " + render_expr(*result.expr) + "\n", out);
      else
        emit(output, serialize_document(*result.automaton, result.cond), out);
      return kExitTrue;
    }
    if (tb->parsed()) {
      const auto doc = read_document_file(file);
      const Condition c = condition_or(cond_words, doc.condition);
      emit(output, serialize_document(to_buchi(doc.automaton, c), cond::buchi()), out);
      return kExitTrue;
    }
    if (em->parsed()) {
      const auto doc = read_document_file(file);
      const Condition c = condition_or(cond_words, doc.condition);
      const bool buchi_form = c == cond::buchi() && doc.automaton.table().size() <= 1;
      const Automaton b = buchi_form ? doc.automaton : to_buchi(doc.automaton, c);
      const auto report = is_empty(b);
      if (report.empty) {
        out << "empty\n";
        return kExitTrue;
      }
      out << "witness " << format_word(b.alphabet(), *report.witness) << "\n";
      return kExitFalse;
    }
    if (eq->parsed()) {
      const auto d1 = read_document_file(file);
      const auto d2 = read_document_file(file2);
      const auto r = bounded_equiv(d1.automaton, d1.condition, d2.automaton, d2.condition,
                                   stem_max, cycle_max);
      if (r.equal) {
        out << "equal-bounded " << stem_max << " " << cycle_max << "\n";
        return kExitTrue;
      }
      out << "counterexample " << format_word(d1.automaton.alphabet(), r.word)
          << " in1=" << yes_no(r.in1) << " in2=" << yes_no(r.in2) << "\n";
      return kExitFalse;
    }
    if (ms->parsed()) {
      const auto doc = read_document_file(file);
      const Condition c = condition_or(cond_words, doc.condition);
      const auto [a, pc] = mso::to_pair_condition(doc.automaton, c);
      out << mso::render(mso::automaton_formula(a, pc)) << "\n";
      return kExitTrue;
    }
    if (wi->parsed()) {
      const auto id = parse_figure_id(figure);
      if (!id) throw Error("unknown figure '" + figure + "' (expected fig2, fig3, fig4 or fig5)");
      if (!check) {
        const auto fig = figure_automaton(*id);
        out << serialize_document(fig.automaton, fig.cond);
        return kExitTrue;
      }
      const auto r = verify_figure(*id, w_stem, w_cycle);
      const Alphabet ab({"a", "b"});
      if (r.equal) {
        out << "equal-bounded " << w_stem << " " << w_cycle << "\n";
        return kExitTrue;
      }
      out << "counterexample " << format_word(ab, r.word) << " in1=" << yes_no(r.in1)
          << " in2=" << yes_no(r.in2) << "\n";
      return kExitFalse;
    }
  } catch (const std::exception& e) {
    std::string what = e.what();
    std::replace(what.begin(), what.end(), '\n', ' ');
    err << "omega: " << what << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace omega::cli
