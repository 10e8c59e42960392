#include "strand/harness/corpus.hpp"
#include "strand/harness/grammar_bundle.hpp"
#include "strand/harness/render.hpp"
#include "strand/tfs/avm.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

using namespace strand;

enum Exit { ok = 0, mismatch = 1, load_error = 2 };

struct Globals {
  std::string grammar_dir = harness::default_grammar_dir().string();
  bool no_selr = false, no_vcelr = false, no_pcelr = false;
  bool disable_iiib = false;
  unsigned threads = 1;
};

harness::Grammar grammar(const Globals &g) {
  return harness::load_grammar(g.grammar_dir,
                               {!g.no_selr, !g.no_vcelr, !g.no_pcelr});
}

parser::ParseOptions parse_options(const Globals &g) {
  parser::ParseOptions o;
  o.disable_iiib = g.disable_iiib;
  o.threads = g.threads;
  return o;
}

int cmd_parse(const Globals &g, const std::string &sentence, bool avm,
              bool derivation, bool json, bool explain) {
  auto gr = grammar(g);
  auto tokens = parser::tokenize(sentence);
  auto opts = parse_options(g);
  opts.explain = explain;
  parser::Forest forest;
  try {
    forest = parser::parse(gr.closed, tokens, opts);
  } catch (const parser::UnknownWords &e) {
    if (json)
      std::cout << nlohmann::json{{"version", harness::output_version},
                                  {"tokens", tokens},
                                  {"error", e.what()},
                                  {"parses", 0}}
                       .dump(2)
                << "\n";
    else
      std::cerr << "strand: " << e.what() << "\n";
    return mismatch;
  }
  if (json) {
    auto j = harness::parse_json(forest, avm);
    if (explain && forest.roots.empty())
      j["explanation"] = harness::explain(forest);
    std::cout << j.dump(2) << "\n";
    return forest.roots.empty() ? mismatch : ok;
  }
  std::cout << forest.roots.size() << " parse(s), " << forest.edges.size()
            << " edges" << (forest.truncated ? " (truncated)" : "") << "\n";
  for (std::size_t i = 0; i < forest.roots.size(); ++i) {
    int r = forest.roots[i];
    if (derivation || avm)
      std::cout << "\nparse " << i + 1 << ":\n";
    if (derivation)
      std::cout << harness::render_derivation(forest, r);
    if (avm)
      std::cout << harness::render_sign(forest.edge(r).sign) << "\n";
  }
  if (explain && forest.roots.empty())
    std::cout << harness::explain(forest);
  return forest.roots.empty() ? mismatch : ok;
}

int cmd_corpus(const Globals &g, const std::string &file, bool json,
               bool explain) {
  auto gr = grammar(g);
  auto items = harness::load_corpus(file);
  for (const auto &item : items)
    for (const auto &t : item.tokens)
      if (gr.closed.lookup(t).empty())
        throw harness::CorpusError(file + ":" + std::to_string(item.line) +
                                       ": unknown word `" + t + "` in item " +
                                       item.id,
                                   item.line);
  auto report = harness::run_corpus(gr.closed, items, parse_options(g));
  if (!explain)
    for (auto &o : report.items)
      o.explanation.clear();
  if (json)
    std::cout << harness::report_json(report).dump(2) << "\n";
  else
    std::cout << harness::report_text(report);
  return report.ok() ? ok : mismatch;
}

int cmd_lexicon(const Globals &g, bool derived) {
  auto gr = grammar(g);
  bool first = true;
  for (const auto &e : gr.closed.entries()) {
    if (e.provenance.derived() != derived)
      continue;
    if (!first)
      std::cout << "\n";
    first = false;
    std::cout << "entry " << e.id << "\n  template " << e.template_name << "\n";
    if (e.provenance.derived()) {
      std::cout << "  rule " << e.provenance.rule << "\n  base "
                << e.provenance.base_id << "\n";
      if (e.provenance.position >= 0)
        std::cout << "  position " << e.provenance.position << "\n";
    }
    if (e.wh)
      std::cout << "  wh\n";
    std::cout << harness::render_sign(e.sign) << "\n";
  }
  return ok;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Parser for a fragment of Dutch with traceless extraction"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--grammar-dir", g.grammar_dir,
                 "Directory holding dutch.sorts and dutch.lex");
  app.add_flag("--no-selr", g.no_selr, "Leave the SELR out of the closure");
  app.add_flag("--no-vcelr", g.no_vcelr, "Leave the VCELR out of the closure");
  app.add_flag("--no-pcelr", g.no_pcelr, "Leave the PCELR out of the closure");

  auto *parse = app.add_subcommand("parse", "Parse one sentence");
  std::string sentence;
  bool avm = false, derivation = false, json = false, explain = false;
  parse->add_option("sentence", sentence)->required();
  parse->add_flag("--avm", avm, "Print the AVM of each parse");
  parse->add_flag("--derivation", derivation, "Print each derivation tree");
  parse->add_flag("--json", json, "Structured output");
  parse->add_flag("--explain", explain, "Explain a failure to parse");
  parse->add_flag("--disable-schema-iiib", g.disable_iiib);
  parse->add_option("--threads", g.threads)->check(CLI::Range(1u, 64u));

  auto *corpus = app.add_subcommand("corpus", "Judgment corpus");
  corpus->require_subcommand(1);
  auto *run = corpus->add_subcommand("run", "Run a corpus file");
  std::string file;
  run->add_option("file", file)->required();
  run->add_flag("--json", json, "Structured output");
  run->add_flag("--explain", explain, "Explain failing items");
  run->add_flag("--disable-schema-iiib", g.disable_iiib);
  run->add_option("--threads", g.threads)->check(CLI::Range(1u, 64u));

  auto *lexicon = app.add_subcommand("lexicon", "Lexicon inspection");
  lexicon->require_subcommand(1);
  auto *dump = lexicon->add_subcommand("dump", "Print entries as AVMs");
  bool derived = false;
  dump->add_flag("--derived", derived, "Print the rule-derived entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? ok : load_error;
  }

  try {
    if (*parse)
      return cmd_parse(g, sentence, avm, derivation, json, explain);
    if (*run)
      return cmd_corpus(g, file, json, explain);
    if (*dump)
      return cmd_lexicon(g, derived);
  } catch (const lexicon::LoadError &e) {
    std::cerr << "strand: " << e.what() << "\n";
    return load_error;
  } catch (const harness::CorpusError &e) {
    std::cerr << "strand: " << e.what() << "\n";
    return load_error;
  } catch (const std::exception &e) {
    std::cerr << "strand: " << e.what() << "\n";
    return load_error;
  }
  return ok;
}
