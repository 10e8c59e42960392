#pragma once

#include "strand/lexrules/lexrules.hpp"

#include <filesystem>

namespace strand::harness {

/// The signature, the base lexicon and its closure under the lexical rules.
struct Grammar {
  tfs::SignaturePtr signature;
  lexicon::Lexicon base;
  lexicon::Lexicon closed;
};

/// Directory baked in at build time (the repository's grammar/).
std::filesystem::path default_grammar_dir();

/// Loads `dir`/dutch.sorts and `dir`/dutch.lex and closes the lexicon.
Grammar load_grammar(const std::filesystem::path &dir,
                     const lexrules::ClosureOptions &rules = {});

} // namespace strand::harness
