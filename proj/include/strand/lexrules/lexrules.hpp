#pragma once

#include "strand/lexicon/lexicon.hpp"

#include <optional>
#include <string>

namespace strand::lexrules {

using lexicon::LexicalEntry;
using lexicon::Lexicon;

/// A derived entry, or why the rule does not apply.
struct RuleResult {
  std::optional<LexicalEntry> entry;
  std::string reason;

  explicit operator bool() const { return entry.has_value(); }
};

/// Subject extraction: SUBJ <1> becomes SUBJ < > and the LOCAL of 1,
/// constrained to R minus, becomes the single INHER|SLASH member.
RuleResult apply_selr(const LexicalEntry &e);

/// Complement extraction: removes COMPS element `position` (an R minus NP
/// or a PP) and slashes its LOCAL.
RuleResult apply_vcelr(const LexicalEntry &e, int position);

/// Preposition complement extraction on P0 entries: COMPS < >, the negative
/// constraint erased, CONTENT a fresh neuter ppro shared with the slashed
/// copy of the complement's LOCAL, which is made R plus.
RuleResult apply_pcelr(const LexicalEntry &e);

struct ClosureOptions {
  bool selr = true;
  bool vcelr = true;
  bool pcelr = true;
};

/// The input entries plus every entry the enabled rules derive from its base
/// entries. Derived entries follow the input, sorted by id.
Lexicon close_lexicon(const Lexicon &base, const ClosureOptions &options = {});

} // namespace strand::lexrules
