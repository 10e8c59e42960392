#include "strand/harness/grammar_bundle.hpp"

namespace strand::harness {

std::filesystem::path default_grammar_dir() {
#ifdef STRAND_GRAMMAR_DIR
  return STRAND_GRAMMAR_DIR;
#else
  return "grammar";
#endif
}

Grammar load_grammar(const std::filesystem::path &dir,
                     const lexrules::ClosureOptions &rules) {
  auto sig = std::make_shared<const tfs::SortHierarchy>(
      tfs::SortHierarchy::load(dir / "dutch.sorts"));
  auto base = lexicon::load_lexicon(sig, (dir / "dutch.lex").string());
  auto closed = lexrules::close_lexicon(base, rules);
  return Grammar{sig, std::move(base), std::move(closed)};
}

} // namespace strand::harness
