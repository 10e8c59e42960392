#include "strand/lexrules/lexrules.hpp"
#include "strand/tfs/avm.hpp"
#include "strand/tfs/workspace.hpp"

#include <algorithm>

namespace strand::lexrules {

namespace path = grammar::path;
using tfs::NodeId;

namespace {

RuleResult inapplicable(std::string reason) { return {std::nullopt, std::move(reason)}; }

LexicalEntry derived(const LexicalEntry &base, const std::string &rule,
                     int position, tfs::FeatureStructure fs) {
  LexicalEntry e{base.id + "+" + rule +
                     (position >= 0 ? "/" + std::to_string(position)
                                    : std::string()),
                 grammar::Sign{base.sign.phon, std::move(fs)},
                 base.template_name,
                 {rule, base.id, position},
                 base.wh};
  return e;
}

bool head_below(const tfs::FeatureStructure &fs, NodeId n,
                std::string_view sort) {
  const auto &h = fs.hierarchy();
  return h.subsumes(h.sort(sort), fs.sort(n));
}

std::optional<std::string> unslashed(const LexicalEntry &e) {
  if (grammar::sort_at(e.sign.fs, 0, path::inher_slash) != "eset")
    return "INHER|SLASH is not empty";
  return std::nullopt;
}

// Points INHER|SLASH at a one-member set holding `local`.
void slash(tfs::Workspace &ws, NodeId root, NodeId local) {
  NodeId inher = *ws.follow(root, "SYNSEM|NONLOCAL|INHER");
  NodeId member[] = {local};
  ws.set_arc(inher, "SLASH", ws.make_set(member));
}

NodeId avm(tfs::Workspace &ws, std::string_view text) {
  return ws.add(tfs::parse_avm(ws.signature(), text));
}

} // namespace

RuleResult apply_selr(const LexicalEntry &e) {
  const auto &fs = e.sign.fs;
  auto head = fs.resolve_path(path::head);
  if (!head || !head_below(fs, *head, "verb"))
    return inapplicable("not verbal");
  if (grammar::valence(fs, 0, path::subj).empty())
    return inapplicable("SUBJ is empty");
  if (auto why = unslashed(e))
    return inapplicable(*why);

  tfs::Workspace ws(fs.signature());
  NodeId root = ws.add(fs);
  NodeId cat = *ws.follow(root, path::cat);
  NodeId list = *ws.arc(cat, ws.hierarchy().feature("SUBJ"));
  NodeId subject = ws.chain_items(list).front();
  NodeId local = ws.ensure(subject, "LOCAL");
  if (!ws.unify(ws.ensure(local, "CAT|HEAD"), avm(ws, "noun[R minus]")))
    return inapplicable("subject cannot be R minus: " +
                        ws.failure()->describe());
  ws.set_arc(cat, "SUBJ", *ws.arc(list, ws.hierarchy().feature("REST")));
  slash(ws, root, local);
  return {derived(e, "SELR", -1, ws.extract(root)), {}};
}

RuleResult apply_vcelr(const LexicalEntry &e, int position) {
  const auto &fs = e.sign.fs;
  auto head = fs.resolve_path(path::head);
  if (!head || !head_below(fs, *head, "verb"))
    return inapplicable("not verbal");
  auto comps = grammar::valence(fs, 0, path::comps);
  if (position < 0 || static_cast<std::size_t>(position) >= comps.size())
    return inapplicable("no complement at position " +
                        std::to_string(position));
  if (auto why = unslashed(e))
    return inapplicable(*why);
  auto chead = fs.resolve_path("LOCAL|CAT|HEAD", comps[position]);
  if (!chead)
    return inapplicable("complement has no HEAD");
  if (head_below(fs, *chead, "noun")) {
    if (grammar::sort_at(fs, *chead, "R") != "minus")
      return inapplicable("NP complement is not R minus");
  } else if (!head_below(fs, *chead, "prep")) {
    return inapplicable("complement is neither NP nor PP");
  }

  tfs::Workspace ws(fs.signature());
  NodeId root = ws.add(fs);
  NodeId cat = *ws.follow(root, path::cat);
  auto items = ws.chain_items(*ws.arc(cat, ws.hierarchy().feature("COMPS")));
  NodeId local = ws.ensure(items[position], "LOCAL");
  items.erase(items.begin() + position);
  ws.set_arc(cat, "COMPS", ws.make_list(items));
  slash(ws, root, local);
  return {derived(e, "VCELR", position, ws.extract(root)), {}};
}

RuleResult apply_pcelr(const LexicalEntry &e) {
  const auto &fs = e.sign.fs;
  auto head = fs.resolve_path(path::head);
  if (!head || !head_below(fs, *head, "prep"))
    return inapplicable("not prepositional");
  auto comps = grammar::valence(fs, 0, path::comps);
  if (comps.size() != 1)
    return inapplicable("COMPS is not a singleton");
  auto content = fs.resolve_path(path::content);
  auto comp_content = fs.resolve_path("LOCAL|CONTENT", comps[0]);
  if (!content || content != comp_content)
    return inapplicable("CONTENT is not shared with the complement");
  if (grammar::sort_at(fs, comps[0], "LOCAL|CAT|HEAD|R") != "minus")
    return inapplicable("complement is not R minus");
  if (fs.constraints().empty())
    return inapplicable("no negative constraint");
  if (auto why = unslashed(e))
    return inapplicable(*why);

  tfs::Workspace ws(fs.signature());
  NodeId root = ws.add(fs);
  NodeId local = *ws.follow(root, path::local);
  NodeId cat = *ws.follow(root, path::cat);
  NodeId comp_local = *ws.follow(ws.chain_items(*ws.arc(
                                     cat, ws.hierarchy().feature("COMPS")))[0],
                                 "LOCAL");
  NodeId fresh_content = avm(ws, "ppro[INDEX index[GENDER neut]]");
  NodeId gap = ws.copy_subgraph(comp_local);
  ws.set_arc(gap, "CONTENT", fresh_content);
  ws.set_arc(*ws.follow(gap, "CAT|HEAD"), "R", ws.fresh("plus"));
  ws.set_arc(local, "CONTENT", fresh_content);
  ws.set_arc(cat, "COMPS", ws.fresh("elist"));
  ws.erase_constraints([](const tfs::NegConstraint &) { return true; });
  slash(ws, root, gap);
  return {derived(e, "PCELR", -1, ws.extract(root)), {}};
}

Lexicon close_lexicon(const Lexicon &base, const ClosureOptions &options) {
  Lexicon out(base.signature());
  std::vector<LexicalEntry> extra;
  for (const auto &e : base.entries()) {
    out.add(e);
    if (e.provenance.derived())
      continue;
    if (options.selr)
      if (auto r = apply_selr(e))
        extra.push_back(std::move(*r.entry));
    if (options.vcelr) {
      auto n = grammar::valence(e.sign.fs, 0, path::comps).size();
      for (std::size_t i = 0; i < n; ++i)
        if (auto r = apply_vcelr(e, static_cast<int>(i)))
          extra.push_back(std::move(*r.entry));
    }
    if (options.pcelr)
      if (auto r = apply_pcelr(e))
        extra.push_back(std::move(*r.entry));
  }
  std::sort(extra.begin(), extra.end(),
            [](const LexicalEntry &a, const LexicalEntry &b) { return a.id < b.id; });
  for (auto &e : extra)
    if (!out.find(e.id))
      out.add(std::move(e));
  return out;
}

} // namespace strand::lexrules
