#pragma once

#include "strand/parser/chart.hpp"

#include "json.hpp"

#include <filesystem>

namespace strand::harness {

struct CorpusItem {
  std::string id;
  bool grammatical = true;
  std::vector<std::string> tokens;
  std::string label;
  std::string note;
  std::size_t line = 0;
};

struct CorpusError : std::runtime_error {
  CorpusError(const std::string &what, std::size_t line)
      : std::runtime_error(what), line(line) {}
  std::size_t line;
};

/// One item per line: id TAB (G|*) TAB tokens TAB label [TAB note]. Blank
/// lines and lines starting with `#` are skipped.
std::vector<CorpusItem> parse_corpus(std::string_view text,
                                     std::string_view source = "<string>");
std::vector<CorpusItem> load_corpus(const std::filesystem::path &path);

enum class Clause { subject_initial, topicalized, wh_question, yes_no, other };

std::string_view clause_name(Clause c);

/// Clause type from the words alone: the material before the first word
/// that can be a finite verb decides.
Clause classify(const lexicon::Lexicon &lex,
                const std::vector<std::string> &tokens);

struct ItemOutcome {
  CorpusItem item;
  std::size_t parses = 0;
  bool pass = false;
  std::string error; // unknown words or truncation
  std::string explanation;
};

struct Report {
  std::vector<ItemOutcome> items;
  std::size_t passed = 0;
  std::size_t failed = 0;

  bool ok() const { return failed == 0; }
};

/// Parses every item; the outcome passes iff a grammatical item has a parse
/// or an ungrammatical one has none. Items are reported in input order.
Report run_corpus(const lexicon::Lexicon &lex,
                  const std::vector<CorpusItem> &items,
                  const parser::ParseOptions &options = {});

std::string report_text(const Report &r);
nlohmann::json report_json(const Report &r);

} // namespace strand::harness
