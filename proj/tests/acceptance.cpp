// Acceptance run: one PASS/FAIL line per criterion.
//
// Exits 0 once every criterion has been evaluated, whatever the outcome;
// with --strict it exits 1 if any criterion fails.

#include "properties.hpp"
#include "support.hpp"

#include "strand/parser/audit.hpp"

#include <chrono>
#include <cstring>
#include <iostream>
#include <thread>

using namespace strand;
using namespace strand::test;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::vector<harness::CorpusItem> all_items() {
  auto items = judgments();
  for (const auto &x : sanity())
    items.push_back(x);
  return items;
}

std::set<std::string> lost_parses(const lexicon::Lexicon &lex,
                                  const parser::ParseOptions &o,
                                  std::set<std::string> &gained) {
  std::set<std::string> lost;
  for (const auto &item : all_items()) {
    const bool before =
        !parser::parse(shipped().closed, item.tokens).roots.empty();
    const bool after = !parser::parse(lex, item.tokens, o).roots.empty();
    if (before && !after)
      lost.insert(item.id);
    if (!before && after)
      gained.insert(item.id);
  }
  return lost;
}

std::string join(const std::set<std::string> &s) {
  std::string out;
  for (const auto &x : s)
    out += (out.empty() ? "" : " ") + x;
  return "{" + out + "}";
}

Outcome corpus_fidelity() {
  const auto start = std::chrono::steady_clock::now();
  auto main = harness::run_corpus(shipped().closed, judgments());
  auto extra = harness::run_corpus(shipped().closed, sanity());
  const double secs = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  std::string detail = std::to_string(main.passed) + "/" +
                       std::to_string(main.items.size()) + " judgments, " +
                       std::to_string(extra.passed) + "/" +
                       std::to_string(extra.items.size()) + " sanity items, " +
                       std::to_string(secs).substr(0, 5) + " s";
  for (const auto *r : {&main, &extra})
    for (const auto &o : r->items)
      if (!o.pass)
        detail += "; " + o.item.id + " wrong";
  return {main.ok() && main.items.size() == 18 && extra.ok() &&
              extra.items.size() == 2 && secs < 1.0,
          detail};
}

Outcome derived_entry() {
  // the entry the PCELR makes of a P0: no complements, neuter pronoun
  // content shared with the single slashed accusative R+ NP, nothing bound
  const char *expected = R"(
    sign[SYNSEM synsem[
      LOCAL local[
        CAT category[HEAD prep[PFORM aan], SUBJ < >, COMPS < >, SPR < >,
                     LEX plus],
        CONTENT #1=ppro[INDEX index[GENDER neut]]],
      NONLOCAL nonlocal[
        INHER inherited[SLASH { local[
          CAT category[HEAD noun[CASE acc, R plus], SUBJ < >, COMPS < >,
                       SPR < >],
          CONTENT #1] }],
        TO-BIND to-bind[SLASH { }]]]]
  )";
  auto derived = lexrules::apply_pcelr(lexicon::instantiate_p0(sig(), "aan"));
  if (!derived)
    return {false, "PCELR does not apply: " + derived.reason};
  const bool same = isomorphic(avm(expected), derived.entry->sign.fs);
  return {same, same ? "isomorphic to the hand-written AVM"
                     : "differs from the hand-written AVM:\n" +
                           tfs::render_avm(derived.entry->sign.fs)};
}

Outcome without_iiib() {
  parser::ParseOptions o;
  o.disable_iiib = true;
  std::set<std::string> gained;
  auto lost = lost_parses(shipped().closed, o, gained);
  std::set<std::string> expected;
  for (const auto &item : all_items())
    if (item.grammatical && item.label == "middle-field-stranding")
      expected.insert(item.id);
  return {lost == expected && gained.empty(),
          "lost " + join(lost) + ", gained " + join(gained) + ", expected " +
              join(expected)};
}

Outcome ablations() {
  std::set<std::string> gained_p, gained_s;
  auto no_pcelr = lexrules::close_lexicon(shipped().base, {true, true, false});
  auto lost_p = lost_parses(no_pcelr, {}, gained_p);
  const std::set<std::string> expected_p{"wh-strand-waar", "top-strand-daar",
                                         "mid-strand-daar", "mid-strand-er"};

  auto no_selr = lexrules::close_lexicon(shipped().base, {false, true, true});
  auto lost_s = lost_parses(no_selr, {}, gained_s);
  std::set<std::string> expected_s;
  for (const auto &item : all_items())
    if (item.grammatical &&
        harness::classify(shipped().closed, item.tokens) ==
            harness::Clause::subject_initial)
      expected_s.insert(item.id);

  return {lost_p == expected_p && lost_s == expected_s && gained_p.empty() &&
              gained_s.empty(),
          "without PCELR lost " + join(lost_p) + "; without SELR lost " +
              join(lost_s) + " (subject-initial: " + join(expected_s) + ")"};
}

Outcome audit() {
  std::size_t edges = 0, forests = 0, chains = 0;
  std::string problems;
  for (const auto &item : all_items()) {
    auto f = parser::parse(shipped().closed, item.tokens);
    ++forests;
    edges += f.edges.size();
    for (const auto &x : parser::audit_forest(f))
      problems += "; " + item.id + " edge " + std::to_string(x.edge) + " " +
                  x.check + ": " + x.detail;
    for (int r : f.roots)
      for (const auto &t : parser::trace_fillers(f, r)) {
        if (auto *x = std::get_if<parser::Finding>(&t))
          problems += "; " + item.id + " " + x->check + ": " + x->detail;
        else
          ++chains;
      }
  }
  return {problems.empty(), std::to_string(edges) + " edges in " +
                                std::to_string(forests) + " forests, " +
                                std::to_string(chains) +
                                " filler-gap chains traced, " +
                                (problems.empty() ? "0 violations" : problems)};
}

Outcome lattice() {
  auto st = check_lattice(sig(), 3400, 42);
  std::string detail = std::to_string(st.structures) + " structures, " +
                       std::to_string(st.unified) + " pairs unified, " +
                       std::to_string(st.clashed) + " clashed";
  for (const auto &f : st.failures)
    detail += "\n    " + f;
  return {st.ok() && st.structures >= 10000, detail};
}

// Pronoun-preposition pairs where combining disagrees with the oracle.
std::vector<std::string> negative_constraint_mismatches(bool accusative_only,
                                                        std::size_t &pairs) {
  auto neuter = avm("ppro[INDEX index[GENDER neut]]");
  std::vector<std::string> out;
  pairs = 0;
  for (const auto &p : shipped().base.entries()) {
    if (p.template_name != "pron")
      continue;
    if (accusative_only &&
        grammar::sort_at(p.sign.fs, 0, "SYNSEM|LOCAL|CAT|HEAD|CASE") != "acc")
      continue;
    const auto &fs = p.sign.fs;
    const bool oracle =
        !subsumes(neuter, fs.subgraph(*fs.resolve_path(grammar::path::content)));
    for (const auto &q : shipped().base.entries()) {
      if (q.template_name != "p0")
        continue;
      ++pairs;
      std::vector<parser::Daughter> ds{
          {&q.sign, {parser::Role::head, -1}},
          {&p.sign, {parser::Role::complement, 0}}};
      const bool combines = std::holds_alternative<parser::Built>(
          parser::combine(parser::Schema::II, ds, 0, true));
      if (combines != oracle)
        out.push_back(q.form() + "+" + p.form() + " (combines " +
                      (combines ? "yes" : "no") + ", oracle " +
                      (oracle ? "yes" : "no") + ")");
    }
  }
  return out;
}

Outcome negative_constraint() {
  std::size_t pairs = 0;
  auto bad = negative_constraint_mismatches(false, pairs);
  std::string detail = std::to_string(pairs) + " pairs, " +
                       std::to_string(bad.size()) + " mismatches";
  for (const auto &b : bad)
    detail += "; " + b;
  if (!bad.empty())
    detail += " -- a nominative pronoun cannot be a prepositional object, "
              "whatever its gender";
  return {bad.empty(), detail};
}

Outcome determinism() {
  const auto items = all_items();
  std::vector<std::string> reference;
  for (const auto &item : items)
    reference.push_back(fingerprint(parser::parse(shipped().closed, item.tokens)));
  std::size_t compared = 0;
  std::string problems;
  for (int run = 0; run < 3; ++run)
    for (unsigned threads : {1u, 2u, 4u, 8u}) {
      parser::ParseOptions o;
      o.threads = threads;
      for (std::size_t i = 0; i < items.size(); ++i) {
        ++compared;
        if (fingerprint(parser::parse(shipped().closed, items[i].tokens, o)) !=
            reference[i])
          problems += "; " + items[i].id + " with " + std::to_string(threads) +
                      " threads";
      }
    }
  // items parsed concurrently with each other
  std::vector<std::string> concurrent(items.size());
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < items.size(); ++i)
    pool.emplace_back([&, i] {
      parser::ParseOptions o;
      o.threads = 2;
      concurrent[i] = fingerprint(parser::parse(shipped().closed, items[i].tokens, o));
    });
  for (auto &t : pool)
    t.join();
  for (std::size_t i = 0; i < items.size(); ++i, ++compared)
    if (concurrent[i] != reference[i])
      problems += "; " + items[i].id + " under concurrent items";

  const auto report = harness::report_json(harness::run_corpus(shipped().closed, items)).dump();
  for (unsigned threads : {1u, 4u}) {
    parser::ParseOptions o;
    o.threads = threads;
    ++compared;
    if (harness::report_json(harness::run_corpus(shipped().closed, items, o)).dump() != report)
      problems += "; report with " + std::to_string(threads) + " threads";
  }
  return {problems.empty(),
          std::to_string(compared) + " forests and reports compared byte for byte" +
              (problems.empty() ? "" : problems)};
}

} // namespace

int main(int argc, char **argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  struct Criterion {
    const char *name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"corpus fidelity", corpus_fidelity},
      {"derived-entry fidelity", derived_entry},
      {"schema IIIb ablation", without_iiib},
      {"lexical rule ablations", ablations},
      {"principle audit", audit},
      {"unification lattice properties", lattice},
      {"negative-constraint property", negative_constraint},
      {"determinism", determinism},
  };
  std::size_t passed = 0, n = 0;
  for (const auto &c : criteria) {
    ++n;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("error: ") + e.what()};
    }
    passed += o.pass;
    std::cout << "criterion " << n << " " << c.name << ": "
              << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ")\n";
  }
  std::size_t pairs = 0;
  auto acc = negative_constraint_mismatches(true, pairs);
  std::cout << "note: negative-constraint property over accusative pronouns "
               "only: "
            << (acc.empty() ? "holds" : "does not hold") << " (" << pairs
            << " pairs, " << acc.size() << " mismatches)\n";
  std::cout << passed << "/" << n << " criteria pass\n";
  return strict && passed != n ? 1 : 0;
}
