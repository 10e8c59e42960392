#include "strand/parser/schema.hpp"
#include "strand/tfs/avm.hpp"
#include "strand/tfs/workspace.hpp"

#include <algorithm>

namespace strand::parser {

namespace path = grammar::path;
using tfs::NodeId;

std::string_view schema_name(Schema s) {
  switch (s) {
  case Schema::I:
    return "I";
  case Schema::II:
    return "II";
  case Schema::III:
    return "III";
  case Schema::IIIb:
    return "IIIb";
  case Schema::spec:
    return "spec";
  case Schema::adjunct:
    return "adjunct";
  }
  return "?";
}

std::optional<Schema> schema_from_name(std::string_view name) {
  for (Schema s : all_schemas)
    if (schema_name(s) == name)
      return s;
  return std::nullopt;
}

namespace {

bool lexical(const Sign &s) {
  return grammar::sort_at(s.fs, 0, path::lex) == "plus";
}

bool nominal(const Sign &s) {
  return grammar::sort_at(s.fs, 0, path::head) == "noun";
}

std::size_t count(const Sign &s, std::string_view list) {
  return grammar::valence(s.fs, 0, list).size();
}

} // namespace

bool head_admissible(Schema s, const Sign &head) {
  switch (s) {
  case Schema::I:
    return lexical(head) && grammar::is_finite(head) &&
           count(head, path::subj) == 1;
  case Schema::II:
    return lexical(head) && count(head, path::comps) > 0;
  case Schema::III:
    return grammar::is_finite(head) && grammar::is_saturated(head) &&
           grammar::is_slashed(head);
  case Schema::IIIb:
    return lexical(head) && grammar::is_finite(head);
  case Schema::spec:
  case Schema::adjunct:
    return nominal(head) && count(head, path::spr) > 0;
  }
  return false;
}

bool role_allowed(Schema s, Role r, const Sign &head) {
  switch (s) {
  case Schema::I:
    return r == Role::subject || r == Role::complement || r == Role::adjunct;
  case Schema::II:
    return r == Role::complement ||
           (r == Role::adjunct && grammar::is_verbal(head));
  case Schema::III:
    return r == Role::filler;
  case Schema::IIIb:
    return r == Role::complement || r == Role::filler || r == Role::adjunct ||
           (r == Role::subject && count(head, path::subj) > 0);
  case Schema::spec:
    return r == Role::specifier;
  case Schema::adjunct:
    return r == Role::adjunct;
  }
  return false;
}

namespace {

struct Counts {
  std::size_t subjects = 0, complements = 0, specifiers = 0, fillers = 0,
              adjuncts = 0;
};

Counts tally(std::span<const Daughter> daughters) {
  Counts c;
  for (const auto &d : daughters) {
    switch (d.role.role) {
    case Role::subject:
      ++c.subjects;
      break;
    case Role::complement:
      ++c.complements;
      break;
    case Role::specifier:
      ++c.specifiers;
      break;
    case Role::filler:
      ++c.fillers;
      break;
    case Role::adjunct:
      ++c.adjuncts;
      break;
    case Role::head:
      break;
    }
  }
  return c;
}

} // namespace

bool inventory_complete(Schema s, std::span<const Daughter> daughters,
                        std::size_t head) {
  const Sign &h = *daughters[head].sign;
  const Counts c = tally(daughters);
  const bool all_comps = c.complements == count(h, path::comps);
  switch (s) {
  case Schema::I:
    return c.subjects == 1 && all_comps;
  case Schema::II:
    return c.complements > 0 && all_comps;
  case Schema::III:
    return c.fillers == 1;
  case Schema::IIIb:
    return c.fillers == 1 && all_comps &&
           c.subjects == count(h, path::subj);
  case Schema::spec:
    return c.specifiers == count(h, path::spr);
  case Schema::adjunct:
    return c.adjuncts == 1;
  }
  return false;
}

std::vector<Binding> bindings(Schema s, std::span<const Daughter> daughters,
                              std::size_t head) {
  std::vector<Binding> out;
  auto members = [&](std::size_t d) {
    auto n = grammar::inher_slash(daughters[d].sign->fs, 0).size();
    for (std::size_t m = 0; m < n; ++m)
      out.push_back({static_cast<int>(d), static_cast<int>(m)});
  };
  if (s == Schema::III)
    members(head);
  else if (s == Schema::IIIb)
    for (std::size_t d = 0; d < daughters.size(); ++d)
      if (daughters[d].role.role == Role::complement)
        members(d);
  return out;
}

std::variant<Built, Rejection> combine(Schema s,
                                       std::span<const Daughter> daughters,
                                       std::size_t head, bool complete,
                                       Binding binding) {
  if (head >= daughters.size() || daughters[head].role.role != Role::head)
    return Rejection{"no head daughter"};
  const Sign &head_sign = *daughters[head].sign;
  if (!head_admissible(s, head_sign))
    return Rejection{"head not admissible for schema " +
                     std::string(schema_name(s))};

  const auto &sig = head_sign.fs.signature();
  tfs::Workspace ws(sig);
  std::vector<NodeId> nodes;
  for (const auto &d : daughters)
    nodes.push_back(ws.add(d.sign->fs));
  const NodeId h = nodes[head];
  auto conflict = [&](const std::string &what) {
    return Rejection{what + ": " + ws.failure()->describe()};
  };

  std::vector<bool> used_subj, used_comps, used_spr;
  auto list_of = [&](Role r) -> std::pair<std::string_view, std::vector<bool> *> {
    if (r == Role::subject)
      return {path::subj, &used_subj};
    if (r == Role::complement)
      return {path::comps, &used_comps};
    return {path::spr, &used_spr};
  };
  used_subj.resize(ws.chain_items(*ws.follow(h, path::subj)).size());
  used_comps.resize(ws.chain_items(*ws.follow(h, path::comps)).size());
  used_spr.resize(ws.chain_items(*ws.follow(h, path::spr)).size());

  std::size_t fillers = 0;
  for (std::size_t d = 0; d < daughters.size(); ++d) {
    if (d == head)
      continue;
    const DaughterRole role = daughters[d].role;
    if (role.role == Role::head)
      return Rejection{"two head daughters"};
    if (!role_allowed(s, role.role, head_sign))
      return Rejection{std::string(grammar::role_name(role.role)) +
                       " daughter not allowed in schema " +
                       std::string(schema_name(s))};
    switch (role.role) {
    case Role::subject:
    case Role::complement:
    case Role::specifier: {
      auto [list_path, used] = list_of(role.role);
      auto items = ws.chain_items(*ws.follow(h, list_path));
      if (role.index < 0 || static_cast<std::size_t>(role.index) >= items.size())
        return Rejection{std::string(grammar::role_name(role.role)) +
                         " position " + std::to_string(role.index) +
                         " does not exist"};
      if ((*used)[role.index])
        return Rejection{std::string(grammar::role_name(role.role)) +
                         " position " + std::to_string(role.index) +
                         " already filled"};
      (*used)[role.index] = true;
      if (!ws.unify(items[role.index], *ws.follow(nodes[d], path::synsem)))
        return conflict(std::string(grammar::role_name(role.role)) + " " +
                        std::to_string(role.index));
      break;
    }
    case Role::adjunct: {
      auto mod = ws.follow(nodes[d], std::string(path::head) + "|MOD");
      if (!mod)
        return Rejection{"adjunct daughter has no MOD"};
      if (!ws.unify(*mod, *ws.follow(h, path::synsem)))
        return conflict("adjunct MOD");
      break;
    }
    case Role::filler:
      if (++fillers > 1)
        return Rejection{"more than one filler"};
      if (s == Schema::IIIb) {
        NodeId r_plus = ws.add(tfs::parse_avm(sig, "noun[R plus]"));
        if (!ws.unify(*ws.follow(nodes[d], path::head), r_plus))
          return conflict("IIIb filler must be R plus");
      }
      break;
    case Role::head:
      break;
    }
  }

  if (!complete)
    return Built{Sign{{}, tfs::FeatureStructure(sig)}, nullptr};
  if (!inventory_complete(s, daughters, head))
    return Rejection{"schema " + std::string(schema_name(s)) +
                     " is missing daughters"};

  // binding
  std::vector<NodeId> binders;
  if (s == Schema::III || s == Schema::IIIb) {
    auto filler = std::find_if(daughters.begin(), daughters.end(),
                               [](const Daughter &d) {
                                 return d.role.role == Role::filler;
                               });
    std::size_t f = filler - daughters.begin();
    if (binding.daughter < 0 ||
        static_cast<std::size_t>(binding.daughter) >= daughters.size())
      return Rejection{"no binding chosen"};
    if (s == Schema::III && static_cast<std::size_t>(binding.daughter) != head)
      return Rejection{"schema III binds a member of the head's SLASH"};
    if (s == Schema::IIIb &&
        daughters[binding.daughter].role.role != Role::complement)
      return Rejection{"schema IIIb binds a member of a complement's SLASH"};
    auto members =
        ws.chain_items(*ws.follow(nodes[binding.daughter], path::inher_slash));
    if (binding.member < 0 ||
        static_cast<std::size_t>(binding.member) >= members.size())
      return Rejection{"bound daughter has no SLASH member " +
                       std::to_string(binding.member)};
    NodeId member = members[binding.member];
    if (!ws.unify(*ws.follow(nodes[f], path::local), member))
      return conflict("filler LOCAL and SLASH member");
    binders.push_back(member);
  }
  {
    NodeId to_bind = ws.make_set(binders);
    if (!ws.unify(*ws.follow(h, path::to_bind_slash), to_bind))
      return conflict("head TO-BIND|SLASH");
  }

  // mother
  NodeId mother = ws.fresh("sign");
  NodeId local = ws.ensure(mother, "SYNSEM|LOCAL");
  NodeId cat = ws.ensure(local, "CAT");
  ws.set_arc(cat, "HEAD", *ws.follow(h, path::head));
  auto residue = [&](std::string_view list_path, const std::vector<bool> &used) {
    auto items = ws.chain_items(*ws.follow(h, list_path));
    std::vector<NodeId> rest;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (!used[i])
        rest.push_back(items[i]);
    return ws.make_list(rest);
  };
  ws.set_arc(cat, "SUBJ", residue(path::subj, used_subj));
  ws.set_arc(cat, "COMPS", residue(path::comps, used_comps));
  ws.set_arc(cat, "SPR", residue(path::spr, used_spr));
  ws.set_arc(cat, "LEX", ws.fresh("minus"));
  ws.set_arc(local, "CONTENT", *ws.follow(h, path::content));

  std::vector<NodeId> inherited;
  for (NodeId d : nodes)
    for (NodeId m : ws.chain_items(*ws.follow(d, path::inher_slash))) {
      m = ws.find(m);
      if (std::find(inherited.begin(), inherited.end(), m) == inherited.end() &&
          std::none_of(binders.begin(), binders.end(),
                       [&](NodeId b) { return ws.find(b) == m; }))
        inherited.push_back(m);
    }
  ws.set_arc(ws.ensure(mother, "SYNSEM|NONLOCAL|INHER"), "SLASH",
             ws.make_set(inherited));
  ws.ensure(mother, "SYNSEM|NONLOCAL|TO-BIND|SLASH");

  NodeId config = ws.fresh("config");
  ws.set_arc(config, "DTRS", ws.make_list(nodes));
  ws.set_arc(config, "MOTHER", mother);
  if (!ws.check_constraints())
    return conflict("negative constraint");

  std::vector<std::string> phon;
  for (const auto &d : daughters)
    phon.insert(phon.end(), d.sign->phon.begin(), d.sign->phon.end());
  return Built{Sign{std::move(phon), ws.extract(mother)},
               std::make_shared<const tfs::FeatureStructure>(ws.extract(config))};
}

} // namespace strand::parser
