#include "doctest.h"
#include "support.hpp"

#include "strand/harness/render.hpp"

#include <random>

using namespace strand;
using namespace strand::test;

namespace {

std::size_t corpus_error_line(std::string_view text) {
  try {
    harness::parse_corpus(text);
  } catch (const harness::CorpusError &e) {
    return e.line;
  }
  return 0;
}

std::size_t count(std::string_view hay, std::string_view needle) {
  std::size_t n = 0;
  for (auto at = hay.find(needle); at != std::string_view::npos;
       at = hay.find(needle, at + 1))
    ++n;
  return n;
}

} // namespace

TEST_SUITE("corpus files") {
  TEST_CASE("columns, comments and judgments") {
    auto items = harness::parse_corpus("# header\n\n"
                                       "a\tG\tBeatrix waardeert dat\tlabel\tnote\n"
                                       "b\t*\tbeatrix waardeert daar\tlabel\n");
    REQUIRE(items.size() == 2);
    CHECK(items[0].grammatical);
    CHECK_FALSE(items[1].grammatical);
    CHECK(items[0].tokens == std::vector<std::string>{"beatrix", "waardeert", "dat"});
    CHECK(items[0].note == "note");
    CHECK(items[1].note.empty());
    CHECK(items[1].line == 4);
  }

  TEST_CASE("malformed lines report their line number") {
    CHECK(corpus_error_line("a\tG\tx\n\nb\tmaybe\tx\tl\n") == 1);
    CHECK(corpus_error_line("a\tG\tx\tl\nb\tmaybe\tx\tl\n") == 2);
    CHECK(corpus_error_line("a\tG\tx\tl\tn\textra\n") == 1);
    CHECK(corpus_error_line("a\tG\t \tl\n") == 1);
    CHECK(corpus_error_line("a\tG\tx\tl\na\tG\ty\tl\n") == 2);
    CHECK_THROWS_AS(harness::load_corpus("/nonexistent/corpus.tsv"),
                    harness::CorpusError);
  }

  TEST_CASE("shipped corpora have the expected items") {
    auto items = judgments();
    CHECK(items.size() == 18);
    std::size_t good = 0;
    for (const auto &i : items)
      good += i.grammatical;
    CHECK(good == 10);
    CHECK(sanity().size() == 2);
  }
}

TEST_SUITE("runner") {
  TEST_CASE("empty corpus passes vacuously") {
    auto r = harness::run_corpus(shipped().closed, {});
    CHECK(r.ok());
    CHECK(r.items.empty());
  }

  TEST_CASE("shipped corpus passes") {
    auto r = harness::run_corpus(shipped().closed, judgments());
    CHECK(r.passed == 18);
    CHECK(r.ok());
    auto s = harness::run_corpus(shipped().closed, sanity());
    CHECK(s.passed == 2);
  }

  TEST_CASE("a flipped judgment is caught") {
    auto items = harness::load_corpus(std::string(STRAND_TEST_DATA) + "/flipped.tsv");
    auto r = harness::run_corpus(shipped().closed, items);
    CHECK(r.passed == 17);
    CHECK(r.failed == 1);
    CHECK_FALSE(r.ok());
    for (const auto &o : r.items)
      if (!o.pass) {
        CHECK(o.item.id == "wh-strand-wat");
        CHECK(o.explanation.find("rejected combinations") != std::string::npos);
      }
  }

  TEST_CASE("an overgenerating grammar gets the derivation as explanation") {
    auto items = harness::parse_corpus("x\t*\tbeatrix waardeert dat\tl\n");
    auto r = harness::run_corpus(shipped().closed, items);
    REQUIRE(r.items.size() == 1);
    CHECK_FALSE(r.items[0].pass);
    CHECK(r.items[0].explanation.find("III [beatrix waardeert dat]") == 0);
  }

  TEST_CASE("unknown words are an error, not a pass") {
    auto items = harness::parse_corpus("x\t*\tbeatrix xyzzy\tl\n");
    auto r = harness::run_corpus(shipped().closed, items);
    CHECK_FALSE(r.items[0].pass);
    CHECK(r.items[0].error.find("xyzzy") != std::string::npos);
  }

  TEST_CASE("reports are a function of the input") {
    auto items = judgments();
    auto a = harness::report_json(harness::run_corpus(shipped().closed, items)).dump();
    parser::ParseOptions o;
    o.threads = 4;
    auto b = harness::report_json(harness::run_corpus(shipped().closed, items, o)).dump();
    CHECK(a == b);
    CHECK(harness::report_text(harness::run_corpus(shipped().closed, items)).find("18/18 passed") !=
          std::string::npos);
  }

  TEST_CASE("clause types") {
    const auto &lex = shipped().closed;
    using harness::Clause;
    auto c = [&](std::string_view s) { return harness::classify(lex, parser::tokenize(s)); };
    CHECK(c("beatrix waardeert dat") == Clause::subject_initial);
    CHECK(c("hij heeft op hem gerekend") == Clause::subject_initial);
    CHECK(c("dat zal peggy waarschijnlijk waarderen") == Clause::topicalized);
    CHECK(c("daar zal peggy waarschijnlijk op rekenen") == Clause::topicalized);
    CHECK(c("waar schenkt beatrix het huis aan") == Clause::wh_question);
    CHECK(c("aan welke stichting schenkt beatrix het huis") == Clause::wh_question);
    CHECK(c("schenkt beatrix het huis aan de stichting") == Clause::yes_no);
    CHECK(c("het huis") == Clause::other);
  }
}

TEST_SUITE("rendering") {
  TEST_CASE("derived aan shows the slashed R+ NP sharing its content") {
    auto text = harness::render_sign(entry("aan:p0+PCELR").sign);
    CHECK(text.rfind("PHON < aan >\n", 0) == 0);
    CHECK(text.find("SLASH { local") != std::string::npos);
    CHECK(text.find("R plus") != std::string::npos);
    CHECK(text.find("CASE acc") != std::string::npos);
    CHECK(count(text, "#1=") == 1);
    CHECK(count(text, "#1") == 2);
    CHECK(text.find("COMPS < >") != std::string::npos);
  }

  TEST_CASE("render and parse are inverse on lexicon signs") {
    const auto &entries = shipped().closed.entries();
    std::mt19937 rng(5);
    for (int i = 0; i < 100; ++i) {
      const auto &e = entries[rng() % entries.size()];
      auto text = harness::render_sign(e.sign);
      auto back = harness::parse_sign(sig(), text);
      CHECK_MESSAGE(back.phon == e.sign.phon, e.id);
      CHECK_MESSAGE(isomorphic(back.fs, e.sign.fs), e.id);
      CHECK_MESSAGE(harness::render_sign(back) == text, e.id);
    }
  }

  TEST_CASE("render and parse are inverse on phrases") {
    auto f = parse("beatrix schenkt er geen huis aan");
    for (const auto &e : f.edges) {
      auto text = harness::render_sign(e.sign);
      CHECK(isomorphic(harness::parse_sign(sig(), text).fs, e.sign.fs));
    }
  }

  TEST_CASE("derivation of a stranded preposition question") {
    auto f = parse("waar schenkt beatrix het huis aan");
    auto text = harness::render_derivation(f, f.roots.front());
    CHECK(text ==
          "III [waar schenkt beatrix het huis aan]\n"
          "  filler: waar\n"
          "  head: I [schenkt beatrix het huis aan]\n"
          "    head: schenkt\n"
          "    subject 0: beatrix\n"
          "    complement 0: spec [het huis]\n"
          "      specifier 0: het\n"
          "      head: huis\n"
          "    complement 1: aan ⟨PCELR⟩\n");
  }

  TEST_CASE("a lexical edge is a single leaf") {
    auto f = parse("beatrix");
    REQUIRE(!f.edges.empty());
    CHECK(harness::render_derivation(f, 0) == "beatrix\n");
    auto j = harness::derivation_json(f, 0);
    CHECK(j["entry"] == "beatrix:np");
    CHECK(j["rule"].is_null());
    CHECK_FALSE(j.contains("daughters"));
  }

  TEST_CASE("middle-field filler is the verb's sister") {
    auto f = parse("beatrix schenkt er geen huis aan");
    auto text = harness::render_derivation(f, f.roots.front());
    CHECK(text.find("  head: IIIb [schenkt er geen huis aan]\n"
                    "    head: schenkt ⟨SELR⟩\n"
                    "    filler: er\n") != std::string::npos);
  }

  TEST_CASE("structured output") {
    auto f = parse("waar schenkt beatrix het huis aan");
    auto j = harness::parse_json(f, true);
    CHECK(j["version"] == harness::output_version);
    CHECK(j["parses"] == 1);
    const auto &d = j["roots"][0]["derivation"];
    CHECK(d["schema"] == "III");
    CHECK(d["span"] == nlohmann::json::array({0, 6}));
    CHECK(d["daughters"][0]["role"] == "filler");
    const auto &aan = d["daughters"][1]["daughters"].back();
    CHECK(aan["entry"] == "aan:p0+PCELR");
    CHECK(aan["rule"] == "PCELR");
    CHECK(aan["base"] == "aan:p0");
    CHECK(aan["index"] == 1);
    CHECK(j["roots"][0]["avm"].get<std::string>().rfind("sign", 0) == 0);
  }

  TEST_CASE("explanations for missing parses") {
    parser::ParseOptions o;
    o.explain = true;
    auto f = parse("wat schenkt beatrix het huis aan", o);
    auto text = harness::explain(f);
    CHECK(text.find("widest edges:") == 0);
    CHECK(text.find("I [schenkt beatrix het huis aan] slashed") != std::string::npos);
    CHECK(text.find("filler LOCAL and SLASH member") != std::string::npos);
    CHECK(text.find("R: minus vs plus") != std::string::npos);
  }
}

TEST_SUITE("grammar loading") {
  TEST_CASE("missing directory is a load error") {
    CHECK_THROWS(harness::load_grammar("/nonexistent"));
  }

  TEST_CASE("closure options are honoured") {
    auto g = harness::load_grammar(STRAND_GRAMMAR_DIR, {true, true, false});
    CHECK(g.closed.find("aan:p0+PCELR") == nullptr);
    CHECK(g.closed.find("schenkt:verb+SELR") != nullptr);
  }
}
