#include "strand/grammar/principles.hpp"
#include "strand/tfs/workspace.hpp"

#include <algorithm>

namespace strand::grammar {

std::string_view role_name(Role r) {
  switch (r) {
  case Role::head:
    return "head";
  case Role::subject:
    return "subject";
  case Role::complement:
    return "complement";
  case Role::filler:
    return "filler";
  case Role::adjunct:
    return "adjunct";
  case Role::specifier:
    return "specifier";
  }
  return "?";
}

std::vector<NodeId> PhraseConfig::daughters() const {
  auto dtrs = graph.resolve_path("DTRS");
  return dtrs ? graph.chain_items(*dtrs) : std::vector<NodeId>{};
}

std::optional<NodeId> PhraseConfig::mother() const {
  return graph.resolve_path("MOTHER");
}

PhraseConfig make_config(std::string schema,
                         const std::vector<const Sign *> &daughters,
                         std::vector<DaughterRole> roles, std::size_t head,
                         const Sign *mother) {
  const auto &sig = daughters.at(0)->fs.signature();
  tfs::Workspace ws(sig);
  NodeId root = ws.fresh("config");
  std::vector<NodeId> dtrs;
  for (const Sign *d : daughters)
    dtrs.push_back(ws.add(d->fs));
  ws.set_arc(root, "DTRS", ws.make_list(dtrs));
  if (mother)
    ws.set_arc(root, "MOTHER", ws.add(mother->fs));
  return PhraseConfig{std::move(schema), ws.extract(root), std::move(roles),
                      head};
}

namespace {

struct ValenceFeature {
  std::string_view name;
  std::string_view path;
  Role role;
};

constexpr ValenceFeature valence_features[] = {
    {"SUBJ", path::subj, Role::subject},
    {"COMPS", path::comps, Role::complement},
    {"SPR", path::spr, Role::specifier},
};

} // namespace

Checked<ValenceResidue> check_valence(const PhraseConfig &config) {
  const auto &g = config.graph;
  const auto dtrs = config.daughters();
  if (dtrs.size() != config.roles.size())
    return Violation{"valence", "role list does not match daughters"};
  if (config.head >= dtrs.size() || config.roles[config.head].role != Role::head)
    return Violation{"valence", "configuration has no head daughter"};
  const NodeId head = dtrs[config.head];
  const auto mother = config.mother();

  ValenceResidue residue;
  for (const auto &vf : valence_features) {
    const auto list = valence(g, head, vf.path);
    std::vector<bool> used(list.size(), false);
    for (std::size_t d = 0; d < dtrs.size(); ++d) {
      if (config.roles[d].role != vf.role)
        continue;
      int i = config.roles[d].index;
      if (i < 0 || static_cast<std::size_t>(i) >= list.size())
        return Violation{"valence",
                         std::string(vf.name) + " has no position " +
                             std::to_string(i) + " for daughter " +
                             std::to_string(d),
                         i};
      if (used[i])
        return Violation{"valence",
                         std::string(vf.name) + " position " +
                             std::to_string(i) + " discharged twice",
                         i};
      used[i] = true;
      auto synsem = g.resolve_path(path::synsem, dtrs[d]);
      if (!synsem)
        return Violation{"valence", "daughter without SYNSEM", i};
      if (*synsem != list[i]) {
        tfs::Workspace ws(g.signature());
        NodeId base = ws.add(g);
        if (!ws.unify(base + list[i], base + *synsem))
          return Violation{"valence",
                           std::string(vf.name) + " element " +
                               std::to_string(i) +
                               " does not unify with its daughter: " +
                               ws.failure()->describe(),
                           i};
      }
    }
    std::vector<NodeId> rest;
    for (std::size_t i = 0; i < list.size(); ++i)
      if (!used[i])
        rest.push_back(list[i]);

    if (mother) {
      const auto have = valence(g, *mother, vf.path);
      if (have.size() != rest.size())
        return Violation{"valence",
                         "mother " + std::string(vf.name) + " has length " +
                             std::to_string(have.size()) + ", expected " +
                             std::to_string(rest.size())};
      for (std::size_t i = 0; i < have.size(); ++i)
        if (have[i] != rest[i])
          return Violation{"valence",
                           "mother " + std::string(vf.name) + " element " +
                               std::to_string(i) +
                               " is not shared with the head daughter",
                           static_cast<int>(i)};
    }
    if (vf.role == Role::subject)
      residue.subj = std::move(rest);
    else if (vf.role == Role::complement)
      residue.comps = std::move(rest);
    else
      residue.spr = std::move(rest);
  }
  return residue;
}

Checked<std::vector<NodeId>> check_nfp(const PhraseConfig &config) {
  const auto &g = config.graph;
  const auto dtrs = config.daughters();
  if (config.head >= dtrs.size())
    return Violation{"nfp", "configuration has no head daughter"};

  std::vector<NodeId> in_union;
  for (NodeId d : dtrs)
    for (NodeId m : inher_slash(g, d))
      if (std::find(in_union.begin(), in_union.end(), m) == in_union.end())
        in_union.push_back(m);

  const auto binders = to_bind_slash(g, dtrs[config.head]);
  for (std::size_t i = 0; i < binders.size(); ++i)
    if (std::find(in_union.begin(), in_union.end(), binders[i]) ==
        in_union.end())
      return Violation{"nfp",
                       "TO-BIND member " + std::to_string(i) +
                           " binds nothing inherited by the daughters",
                       static_cast<int>(i)};

  std::vector<NodeId> required;
  for (NodeId m : in_union)
    if (std::find(binders.begin(), binders.end(), m) == binders.end())
      required.push_back(m);

  if (auto mother = config.mother()) {
    auto have = inher_slash(g, *mother);
    auto a = have, b = required;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b || std::adjacent_find(a.begin(), a.end()) != a.end())
      return Violation{"nfp", "mother INHER|SLASH has " +
                                  std::to_string(have.size()) +
                                  " member(s), the daughters require " +
                                  std::to_string(required.size())};
  }
  return required;
}

std::optional<Violation> check_head_feature(const PhraseConfig &config) {
  auto mother = config.mother();
  if (!mother)
    return Violation{"head-feature", "configuration has no mother"};
  const auto dtrs = config.daughters();
  if (config.head >= dtrs.size())
    return Violation{"head-feature", "configuration has no head daughter"};
  auto mh = config.graph.resolve_path(path::head, *mother);
  auto hh = config.graph.resolve_path(path::head, dtrs[config.head]);
  if (!mh || !hh || *mh != *hh)
    return Violation{"head-feature",
                     "HEAD of mother and head daughter are not shared"};
  return std::nullopt;
}

} // namespace strand::grammar
