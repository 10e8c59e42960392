#include "strand/harness/corpus.hpp"
#include "strand/harness/render.hpp"

#include <fstream>
#include <sstream>

namespace strand::harness {

using nlohmann::json;

namespace {

std::vector<std::string> split_tabs(const std::string &line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos)
      break;
    start = tab + 1;
  }
  return out;
}

} // namespace

std::vector<CorpusItem> parse_corpus(std::string_view text,
                                     std::string_view source) {
  std::vector<CorpusItem> items;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#')
      continue;
    auto where = std::string(source) + ":" + std::to_string(lineno) + ": ";
    auto cols = split_tabs(line);
    if (cols.size() < 4 || cols.size() > 5)
      throw CorpusError(where + "expected 4 or 5 tab-separated columns", lineno);
    CorpusItem item;
    item.id = cols[0];
    if (item.id.empty())
      throw CorpusError(where + "empty id", lineno);
    if (cols[1] == "G")
      item.grammatical = true;
    else if (cols[1] == "*")
      item.grammatical = false;
    else
      throw CorpusError(where + "judgment must be G or *, got `" + cols[1] + "`",
                        lineno);
    item.tokens = parser::tokenize(cols[2]);
    if (item.tokens.empty())
      throw CorpusError(where + "no tokens", lineno);
    item.label = cols[3];
    if (cols.size() == 5)
      item.note = cols[4];
    item.line = lineno;
    for (const auto &other : items)
      if (other.id == item.id)
        throw CorpusError(where + "duplicate id `" + item.id + "`", lineno);
    items.push_back(std::move(item));
  }
  return items;
}

std::vector<CorpusItem> load_corpus(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw CorpusError("cannot open corpus " + path.string(), 0);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_corpus(buf.str(), path.string());
}

std::string_view clause_name(Clause c) {
  switch (c) {
  case Clause::subject_initial:
    return "subject-initial";
  case Clause::topicalized:
    return "topicalized";
  case Clause::wh_question:
    return "wh-question";
  case Clause::yes_no:
    return "yes/no";
  case Clause::other:
    return "other";
  }
  return "?";
}

Clause classify(const lexicon::Lexicon &lex,
                const std::vector<std::string> &tokens) {
  std::size_t verb = tokens.size();
  for (std::size_t i = 0; i < tokens.size() && verb == tokens.size(); ++i)
    for (const auto *e : lex.lookup(tokens[i]))
      if (grammar::is_finite(e->sign))
        verb = i;
  if (verb == tokens.size())
    return Clause::other;
  if (verb == 0)
    return Clause::yes_no;
  for (std::size_t i = 0; i < verb; ++i)
    for (const auto *e : lex.lookup(tokens[i]))
      if (e->wh)
        return Clause::wh_question;
  for (const auto *e : lex.lookup(tokens[0]))
    if (grammar::sort_at(e->sign.fs, 0, std::string(grammar::path::head) +
                                           "|CASE") == "nom")
      return Clause::subject_initial;
  return Clause::topicalized;
}

Report run_corpus(const lexicon::Lexicon &lex,
                  const std::vector<CorpusItem> &items,
                  const parser::ParseOptions &options) {
  Report report;
  for (const auto &item : items) {
    ItemOutcome out{item, 0, false, {}, {}};
    try {
      auto forest = parser::parse(lex, item.tokens, options);
      out.parses = forest.roots.size();
      if (forest.truncated)
        out.error = "edge limit reached";
      out.pass = out.error.empty() && (item.grammatical == (out.parses > 0));
      if (!out.pass && item.grammatical) {
        auto opts = options;
        opts.explain = true;
        out.explanation = explain(parser::parse(lex, item.tokens, opts));
      } else if (!out.pass) {
        out.explanation = render_derivation(forest, forest.roots.front());
      }
    } catch (const parser::UnknownWords &e) {
      out.error = e.what();
    }
    (out.pass ? report.passed : report.failed)++;
    report.items.push_back(std::move(out));
  }
  return report;
}

std::string report_text(const Report &r) {
  std::string out;
  for (const auto &o : r.items) {
    out += std::string(o.pass ? "PASS" : "FAIL") + "  " + o.item.id + "  " +
           (o.item.grammatical ? "G" : "*") + "  parses=" +
           std::to_string(o.parses) + "  " +
           grammar::phon_string(o.item.tokens) + "\n";
    if (!o.error.empty())
      out += "      error: " + o.error + "\n";
    if (!o.pass && !o.explanation.empty()) {
      std::istringstream in(o.explanation);
      for (std::string line; std::getline(in, line);)
        out += "      " + line + "\n";
    }
  }
  out += std::to_string(r.passed) + "/" + std::to_string(r.items.size()) +
         " passed\n";
  return out;
}

json report_json(const Report &r) {
  json j;
  j["version"] = output_version;
  j["passed"] = r.passed;
  j["failed"] = r.failed;
  j["items"] = json::array();
  for (const auto &o : r.items) {
    json item;
    item["id"] = o.item.id;
    item["expected"] = o.item.grammatical ? "G" : "*";
    item["tokens"] = o.item.tokens;
    item["label"] = o.item.label;
    item["parses"] = o.parses;
    item["pass"] = o.pass;
    if (!o.error.empty())
      item["error"] = o.error;
    if (!o.explanation.empty())
      item["explanation"] = o.explanation;
    j["items"].push_back(std::move(item));
  }
  return j;
}

} // namespace strand::harness
