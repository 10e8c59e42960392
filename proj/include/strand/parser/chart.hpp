#pragma once

#include "strand/lexicon/lexicon.hpp"
#include "strand/parser/schema.hpp"

#include <stdexcept>

namespace strand::parser {

/// A chart item: a word or a phrase over tokens [start, end).
struct Edge {
  int id = -1;
  int start = 0;
  int end = 0;
  Sign sign{{}, tfs::FeatureStructure(nullptr)};
  std::string schema; // "lexical" for words
  std::vector<int> daughters; // edge ids in surface order
  std::vector<DaughterRole> roles;
  std::size_t head = 0;
  Binding binding;
  const lexicon::LexicalEntry *entry = nullptr;
  /// The local tree the edge was built from (MOTHER plus DTRS); phrases only.
  std::shared_ptr<const tfs::FeatureStructure> config;

  bool lexical() const { return entry != nullptr; }
};

/// A combination the parser tried and gave up on.
struct Attempt {
  int start = 0;
  int end = 0;
  std::string schema;
  std::vector<int> daughters;
  std::string reason;
};

struct Forest {
  std::vector<std::string> tokens;
  std::vector<Edge> edges; // ids are indices
  std::vector<int> roots;
  bool truncated = false;
  std::vector<Attempt> attempts; // only with ParseOptions::explain

  const Edge &edge(int id) const { return edges.at(id); }
};

struct ParseOptions {
  bool disable_iiib = false;
  unsigned threads = 1;
  std::size_t edge_limit = 200000;
  bool explain = false;
};

struct UnknownWords : std::runtime_error {
  explicit UnknownWords(std::vector<std::string> words);
  std::vector<std::string> words;
};

/// Spans the whole input, saturated, finite verbal head, INHER|SLASH { }.
bool is_root(const Edge &e, std::size_t n_tokens);

/// Splits on whitespace and lowercases.
std::vector<std::string> tokenize(std::string_view sentence);

/// All edges licensed by the schemata, principles and LP constraints.
/// Throws UnknownWords if a token is missing from the lexicon.
Forest parse(const lexicon::Lexicon &lex, const std::vector<std::string> &tokens,
             const ParseOptions &options = {});

} // namespace strand::parser
