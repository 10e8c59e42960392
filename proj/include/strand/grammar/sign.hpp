#pragma once

#include "strand/tfs/feature_structure.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace strand::grammar {

using tfs::NodeId;

/// Feature paths of the sign geometry, relative to a sign node.
namespace path {
inline constexpr std::string_view synsem = "SYNSEM";
inline constexpr std::string_view local = "SYNSEM|LOCAL";
inline constexpr std::string_view cat = "SYNSEM|LOCAL|CAT";
inline constexpr std::string_view head = "SYNSEM|LOCAL|CAT|HEAD";
inline constexpr std::string_view subj = "SYNSEM|LOCAL|CAT|SUBJ";
inline constexpr std::string_view comps = "SYNSEM|LOCAL|CAT|COMPS";
inline constexpr std::string_view spr = "SYNSEM|LOCAL|CAT|SPR";
inline constexpr std::string_view lex = "SYNSEM|LOCAL|CAT|LEX";
inline constexpr std::string_view content = "SYNSEM|LOCAL|CONTENT";
inline constexpr std::string_view inher_slash = "SYNSEM|NONLOCAL|INHER|SLASH";
inline constexpr std::string_view to_bind_slash =
    "SYNSEM|NONLOCAL|TO-BIND|SLASH";
} // namespace path

/// A word or phrase: its phonology plus the typed feature structure rooted
/// at a `sign` node.
struct Sign {
  std::vector<std::string> phon;
  tfs::FeatureStructure fs;
};

std::string phon_string(const std::vector<std::string> &phon);

// Read-only views of a sign inside some feature structure.
std::vector<NodeId> valence(const tfs::FeatureStructure &fs, NodeId sign,
                            std::string_view list_path);
std::vector<NodeId> inher_slash(const tfs::FeatureStructure &fs, NodeId sign);
std::vector<NodeId> to_bind_slash(const tfs::FeatureStructure &fs, NodeId sign);
/// Name of the sort at `path` from `node`, or empty if undefined.
std::string sort_at(const tfs::FeatureStructure &fs, NodeId node,
                    std::string_view path);

/// SUBJ and COMPS both empty lists.
bool is_saturated(const tfs::FeatureStructure &fs, NodeId sign = 0);
bool is_saturated(const Sign &s);

bool is_verbal(const Sign &s);
bool is_finite(const Sign &s);
bool is_slashed(const Sign &s);

} // namespace strand::grammar
