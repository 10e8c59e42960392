#pragma once

#include "strand/parser/chart.hpp"

#include "json.hpp"

namespace strand::harness {

/// Version of the structured (JSON) output; see docs/output-schema.md.
inline constexpr int output_version = 1;

/// A PHON line followed by the AVM of the sign's feature structure.
std::string render_sign(const grammar::Sign &s);

/// Parses the output of render_sign back into a sign.
grammar::Sign parse_sign(const tfs::SignaturePtr &sig, std::string_view text);

/// Indented flat tree: schema names on phrases, the word and the rule that
/// derived its entry (if any) on leaves.
std::string render_derivation(const parser::Forest &forest, int edge);

nlohmann::json derivation_json(const parser::Forest &forest, int edge);

/// Roots, their derivations and (optionally) AVMs.
nlohmann::json parse_json(const parser::Forest &forest, bool with_avm);

/// Human-readable account of why the input has no parse: the widest edges
/// found and the reasons combinations were rejected.
std::string explain(const parser::Forest &forest, std::size_t max_attempts = 20);

} // namespace strand::harness
