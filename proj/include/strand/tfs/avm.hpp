#pragma once

#include "strand/tfs/feature_structure.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace strand::tfs {

struct AvmSyntaxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Attribute-value matrix text.
//
//   value   := [tag] (list | set | sort ['[' (FEATURE value)* ']'])
//   tag     := '#' N '='      first occurrence of a shared node
//            | '#' N          any later occurrence
//   list    := '<' [value (',' value)*] ['|' value] '>'
//   set     := '{' [value (',' value)*] ['|' value] '}'
//   avm     := value ('NOT' [FEATURE ('|' FEATURE)*] ':' value)*
//
// Lists and sets are FIRST/REST chains ending in elist / eset. Tags are
// numbered in order of first appearance, so rendering is deterministic and
// render(parse(render(f))) == render(f).

std::string render_avm(const FeatureStructure &f);

/// Parses AVM text; `consumed` (if given) receives the number of
/// characters read, so callers may embed an AVM in a larger format.
FeatureStructure parse_avm(const SignaturePtr &sig, std::string_view text,
                           std::size_t *consumed = nullptr);

} // namespace strand::tfs
