#pragma once

#include "strand/parser/chart.hpp"

namespace strand::parser {

/// A problem the audit found on one edge.
struct Finding {
  int edge = -1;
  std::string check;
  std::string detail;
};

/// Re-checks every phrasal edge of the forest from its stored local tree,
/// independently of how the parser built it: daughter spans tile the edge,
/// the stored daughters specialise the daughter edges, the stored mother is
/// the edge's sign, and the Valence Principle, the Nonlocal Feature
/// Principle, head-feature sharing and LP hold.
std::vector<Finding> audit_forest(const Forest &forest);

/// One step in tracing a SLASH member down to the word that introduced it.
struct GapLink {
  int edge = -1;
  int member = -1; // index in the edge's INHER|SLASH
};

/// The chain from a filler's binding site down to a lexical edge, or a
/// finding explaining why it could not be traced.
struct FillerGapChain {
  int binder = -1; // the III/IIIb edge
  int filler = -1; // filler daughter edge
  std::vector<GapLink> path;
  std::string rule; // rule that introduced the member on the lexical edge
};

/// Traces every filler in the derivations under `root`. Each trace follows
/// token identity of SLASH members through the stored local trees.
std::vector<std::variant<FillerGapChain, Finding>>
trace_fillers(const Forest &forest, int root);

/// Edges under `root` (root included), depth first.
std::vector<int> subtree(const Forest &forest, int root);

} // namespace strand::parser
