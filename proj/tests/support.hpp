#pragma once

#include "strand/harness/corpus.hpp"
#include "strand/harness/grammar_bundle.hpp"
#include "strand/tfs/avm.hpp"

#include <set>

namespace strand::test {

inline const harness::Grammar &shipped() {
  static const harness::Grammar g = harness::load_grammar(STRAND_GRAMMAR_DIR);
  return g;
}

inline const tfs::SignaturePtr &sig() { return shipped().signature; }

inline tfs::FeatureStructure avm(std::string_view text) {
  return tfs::parse_avm(sig(), text);
}

inline const lexicon::LexicalEntry &entry(std::string_view id) {
  const auto *e = shipped().closed.find(id);
  if (!e)
    throw std::runtime_error("no entry " + std::string(id));
  return *e;
}

inline std::vector<harness::CorpusItem> judgments() {
  return harness::load_corpus(std::string(STRAND_CORPUS_DIR) + "/judgments.tsv");
}

inline std::vector<harness::CorpusItem> sanity() {
  return harness::load_corpus(std::string(STRAND_CORPUS_DIR) + "/sanity.tsv");
}

inline parser::Forest parse(std::string_view sentence,
                            const parser::ParseOptions &o = {}) {
  return parser::parse(shipped().closed, parser::tokenize(sentence), o);
}

/// Byte-level summary of a forest: every edge with its span, schema,
/// daughters, roles, entry, binding and canonical sign, then the roots.
inline std::string fingerprint(const parser::Forest &f) {
  std::string out;
  for (const auto &e : f.edges) {
    out += std::to_string(e.id) + " [" + std::to_string(e.start) + "," +
           std::to_string(e.end) + ") " + e.schema;
    for (std::size_t i = 0; i < e.daughters.size(); ++i)
      out += " " + std::to_string(e.daughters[i]) + ":" +
             std::string(grammar::role_name(e.roles[i].role)) +
             std::to_string(e.roles[i].index);
    if (e.entry)
      out += " " + e.entry->id;
    out += " b" + std::to_string(e.binding.daughter) + "." +
           std::to_string(e.binding.member) + " " + e.sign.fs.canonical_key();
    if (e.config)
      out += " " + e.config->canonical_key();
    out += "\n";
  }
  out += "roots";
  for (int r : f.roots)
    out += " " + std::to_string(r);
  return out + (f.truncated ? " truncated\n" : "\n");
}

/// Every path (as "A|B|C") from the root with the sort it reaches and the
/// node it ends at. Paths longer than `max_depth` are not followed, so
/// cyclic structures give a finite table.
struct PathTable {
  std::map<std::string, tfs::SortId> sort;
  std::map<std::string, tfs::NodeId> node;
};

inline PathTable path_table(const tfs::FeatureStructure &f,
                            std::size_t max_depth = 8) {
  PathTable t;
  const auto &h = f.hierarchy();
  auto rec = [&](auto &&self, tfs::NodeId n, const std::string &p,
                 std::size_t depth) -> void {
    t.sort[p] = f.sort(n);
    t.node[p] = n;
    if (depth == max_depth)
      return;
    for (const auto &a : f.node(n).arcs)
      self(self, a.target,
           p.empty() ? h.feature_name(a.feature)
                     : p + "|" + h.feature_name(a.feature),
           depth + 1);
  };
  rec(rec, f.root(), "", 0);
  return t;
}

/// Subsumption from first principles: every path of `general` exists in
/// `specific` with a sort at least as specific, and paths that meet in
/// `general` meet in `specific`.
inline bool subsumes_by_paths(const tfs::FeatureStructure &general,
                              const tfs::FeatureStructure &specific) {
  const auto g = path_table(general);
  const auto s = path_table(specific);
  std::map<tfs::NodeId, tfs::NodeId> image;
  for (const auto &[p, sort] : g.sort) {
    auto it = s.sort.find(p);
    if (it == s.sort.end() || !general.hierarchy().subsumes(sort, it->second))
      return false;
    auto [at, fresh] = image.emplace(g.node.at(p), s.node.at(p));
    if (!fresh && at->second != s.node.at(p))
      return false;
  }
  return true;
}

} // namespace strand::test
