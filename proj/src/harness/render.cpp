#include "strand/harness/render.hpp"
#include "strand/tfs/avm.hpp"

#include <algorithm>
#include <set>

namespace strand::harness {

using nlohmann::json;

std::string render_sign(const grammar::Sign &s) {
  std::string out = "PHON <";
  for (const auto &w : s.phon)
    out += " " + w;
  return out + " >\n" + tfs::render_avm(s.fs);
}

grammar::Sign parse_sign(const tfs::SignaturePtr &sig, std::string_view text) {
  constexpr std::string_view tag = "PHON <";
  if (text.substr(0, tag.size()) != tag)
    throw tfs::AvmSyntaxError("expected `PHON <` at the start of a sign");
  auto close = text.find('>');
  if (close == std::string_view::npos)
    throw tfs::AvmSyntaxError("unterminated PHON list");
  auto words = parser::tokenize(text.substr(tag.size(), close - tag.size()));
  return grammar::Sign{std::move(words), tfs::parse_avm(sig, text.substr(close + 1))};
}

namespace {

std::string leaf_label(const parser::Edge &e) {
  std::string out = e.sign.phon.front();
  if (e.entry->provenance.derived())
    out += " ⟨" + e.entry->provenance.rule + "⟩";
  return out;
}

std::string role_label(const grammar::DaughterRole &r) {
  std::string out(grammar::role_name(r.role));
  if (r.index >= 0 && r.role != grammar::Role::head)
    out += " " + std::to_string(r.index);
  return out;
}

void derivation_lines(const parser::Forest &f, int id, const std::string &prefix,
                      std::string &out) {
  const auto &e = f.edge(id);
  if (e.lexical()) {
    out += leaf_label(e) + "\n";
    return;
  }
  out += e.schema + " [" + grammar::phon_string(e.sign.phon) + "]\n";
  for (std::size_t i = 0; i < e.daughters.size(); ++i) {
    out += prefix + "  " + role_label(e.roles[i]) + ": ";
    derivation_lines(f, e.daughters[i], prefix + "  ", out);
  }
}

} // namespace

std::string render_derivation(const parser::Forest &forest, int edge) {
  std::string out;
  derivation_lines(forest, edge, "", out);
  return out;
}

json derivation_json(const parser::Forest &forest, int edge) {
  const auto &e = forest.edge(edge);
  json j;
  j["edge"] = e.id;
  j["span"] = {e.start, e.end};
  j["schema"] = e.schema;
  j["phon"] = grammar::phon_string(e.sign.phon);
  if (e.lexical()) {
    j["entry"] = e.entry->id;
    j["rule"] = e.entry->provenance.derived() ? json(e.entry->provenance.rule)
                                              : json(nullptr);
    j["base"] = e.entry->provenance.derived()
                    ? json(e.entry->provenance.base_id)
                    : json(nullptr);
    return j;
  }
  j["daughters"] = json::array();
  for (std::size_t i = 0; i < e.daughters.size(); ++i) {
    json d = derivation_json(forest, e.daughters[i]);
    d["role"] = std::string(grammar::role_name(e.roles[i].role));
    if (e.roles[i].index >= 0)
      d["index"] = e.roles[i].index;
    j["daughters"].push_back(std::move(d));
  }
  return j;
}

json parse_json(const parser::Forest &forest, bool with_avm) {
  json j;
  j["version"] = output_version;
  j["tokens"] = forest.tokens;
  j["edges"] = forest.edges.size();
  j["truncated"] = forest.truncated;
  j["parses"] = forest.roots.size();
  j["roots"] = json::array();
  for (int r : forest.roots) {
    json root;
    root["derivation"] = derivation_json(forest, r);
    if (with_avm)
      root["avm"] = tfs::render_avm(forest.edge(r).sign.fs);
    j["roots"].push_back(std::move(root));
  }
  return j;
}

std::string explain(const parser::Forest &forest, std::size_t max_attempts) {
  std::string out;
  std::vector<const parser::Edge *> phrases;
  for (const auto &e : forest.edges)
    if (!e.lexical())
      phrases.push_back(&e);
  std::stable_sort(phrases.begin(), phrases.end(), [](auto *a, auto *b) {
    return a->end - a->start > b->end - b->start;
  });
  out += "widest edges:\n";
  if (phrases.empty())
    out += "  (no phrases)\n";
  for (std::size_t i = 0; i < phrases.size() && i < 5; ++i) {
    const auto &e = *phrases[i];
    out += "  [" + std::to_string(e.start) + "," + std::to_string(e.end) + ") " +
           e.schema + " [" + grammar::phon_string(e.sign.phon) + "]" +
           (grammar::is_saturated(e.sign) ? "" : " unsaturated") +
           (grammar::is_slashed(e.sign) ? " slashed" : "") + "\n";
  }
  if (forest.attempts.empty())
    return out;
  std::vector<const parser::Attempt *> attempts;
  for (const auto &a : forest.attempts)
    attempts.push_back(&a);
  std::stable_sort(attempts.begin(), attempts.end(), [](auto *a, auto *b) {
    return a->end - a->start > b->end - b->start;
  });
  out += "rejected combinations:\n";
  std::set<std::string> shown;
  for (std::size_t i = 0; i < attempts.size() && shown.size() < max_attempts;
       ++i) {
    const auto &a = *attempts[i];
    std::string words;
    for (int d : a.daughters)
      words += (words.empty() ? "" : " | ") +
               grammar::phon_string(forest.edge(d).sign.phon);
    std::string line = "  [" + std::to_string(a.start) + "," +
                       std::to_string(a.end) + ") " + a.schema + " {" + words +
                       "}: " + a.reason + "\n";
    if (shown.insert(line).second)
      out += line;
  }
  return out;
}

} // namespace strand::harness
