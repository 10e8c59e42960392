#include "strand/grammar/sign.hpp"

namespace strand::grammar {

std::string phon_string(const std::vector<std::string> &phon) {
  std::string out;
  for (const auto &w : phon) {
    if (!out.empty())
      out += ' ';
    out += w;
  }
  return out;
}

std::vector<NodeId> valence(const tfs::FeatureStructure &fs, NodeId sign,
                            std::string_view list_path) {
  auto list = fs.resolve_path(list_path, sign);
  if (!list)
    return {};
  return fs.chain_items(*list);
}

std::vector<NodeId> inher_slash(const tfs::FeatureStructure &fs, NodeId sign) {
  return valence(fs, sign, path::inher_slash);
}

std::vector<NodeId> to_bind_slash(const tfs::FeatureStructure &fs,
                                  NodeId sign) {
  return valence(fs, sign, path::to_bind_slash);
}

std::string sort_at(const tfs::FeatureStructure &fs, NodeId node,
                    std::string_view p) {
  auto n = fs.resolve_path(p, node);
  return n ? fs.sort_name(*n) : std::string();
}

bool is_saturated(const tfs::FeatureStructure &fs, NodeId sign) {
  return sort_at(fs, sign, path::subj) == "elist" &&
         sort_at(fs, sign, path::comps) == "elist";
}

bool is_saturated(const Sign &s) { return is_saturated(s.fs); }

bool is_verbal(const Sign &s) {
  auto head = s.fs.resolve_path(path::head);
  const auto &sig = s.fs.hierarchy();
  return head && sig.subsumes(sig.sort("verb"), s.fs.sort(*head));
}

bool is_finite(const Sign &s) {
  return is_verbal(s) &&
         sort_at(s.fs, 0, std::string(path::head) + "|VFORM") == "fin";
}

bool is_slashed(const Sign &s) { return !inher_slash(s.fs, 0).empty(); }

} // namespace strand::grammar
