#include "strand/parser/audit.hpp"
#include "strand/parser/lp.hpp"
#include "strand/tfs/avm.hpp"

#include <algorithm>

namespace strand::parser {

namespace path = grammar::path;
using tfs::NodeId;

namespace {

std::vector<NodeId> config_daughters(const tfs::FeatureStructure &g) {
  auto d = g.resolve_path("DTRS");
  return d ? g.chain_items(*d) : std::vector<NodeId>{};
}

bool neuter_pronoun(const tfs::FeatureStructure &fs, NodeId sign) {
  static const std::string forbidden = "ppro[INDEX index[GENDER neut]]";
  auto content = fs.resolve_path(path::content, sign);
  if (!content)
    return false;
  return tfs::subsumes(tfs::parse_avm(fs.signature(), forbidden),
                       fs.subgraph(*content));
}

void audit_edge(const Forest &forest, const Edge &e,
                std::vector<Finding> &out) {
  auto fail = [&](std::string check, std::string detail) {
    out.push_back({e.id, std::move(check), std::move(detail)});
  };
  if (e.daughters.empty() || e.daughters.size() != e.roles.size() ||
      e.head >= e.daughters.size()) {
    fail("shape", "malformed daughter list");
    return;
  }
  int at = e.start;
  for (int d : e.daughters) {
    if (d < 0 || d >= e.id) {
      fail("shape", "daughter " + std::to_string(d) + " is not an earlier edge");
      return;
    }
    if (forest.edge(d).start != at)
      fail("span", "daughter " + std::to_string(d) + " does not start at " +
                       std::to_string(at));
    at = forest.edge(d).end;
  }
  if (at != e.end)
    fail("span", "daughters end at " + std::to_string(at));
  if (!e.config) {
    fail("shape", "phrase without a local tree");
    return;
  }

  const tfs::FeatureStructure &g = *e.config;
  const auto dtrs = config_daughters(g);
  if (dtrs.size() != e.daughters.size()) {
    fail("shape", "local tree has " + std::to_string(dtrs.size()) +
                      " daughters");
    return;
  }
  for (std::size_t i = 0; i < dtrs.size(); ++i)
    if (!tfs::subsumes(forest.edge(e.daughters[i]).sign.fs, g.subgraph(dtrs[i])))
      fail("daughter", "daughter " + std::to_string(i) +
                           " is not an instance of edge " +
                           std::to_string(e.daughters[i]));
  auto mother = g.resolve_path("MOTHER");
  if (!mother || !tfs::isomorphic(g.subgraph(*mother), e.sign.fs))
    fail("mother", "stored mother differs from the edge's sign");

  grammar::PhraseConfig pc{e.schema, g, e.roles, e.head};
  if (auto v = grammar::check_valence(pc); !grammar::ok(v))
    fail("valence", std::get<grammar::Violation>(v).detail);
  if (auto v = grammar::check_nfp(pc); !grammar::ok(v))
    fail("nfp", std::get<grammar::Violation>(v).detail);
  if (auto v = grammar::check_head_feature(pc))
    fail("head-feature", v->detail);

  auto schema = schema_from_name(e.schema);
  if (!schema) {
    fail("shape", "unknown schema " + e.schema);
    return;
  }
  std::vector<Daughter> ds;
  for (std::size_t i = 0; i < e.daughters.size(); ++i)
    ds.push_back({&forest.edge(e.daughters[i]).sign, e.roles[i]});
  if (auto why = lp_violation(*schema, ds, e.head))
    fail("lp", *why);

  // a filler's LOCAL is the member the head binds
  for (std::size_t i = 0; i < dtrs.size(); ++i) {
    if (e.roles[i].role != Role::filler)
      continue;
    auto local = g.resolve_path(path::local, dtrs[i]);
    auto binders = grammar::to_bind_slash(g, dtrs[e.head]);
    if (!local || std::find(binders.begin(), binders.end(), *local) == binders.end())
      fail("binding", "filler LOCAL is not bound by the head's TO-BIND");
  }

  // an underived P0 never takes a neuter pronoun
  const Edge &head = forest.edge(e.daughters[e.head]);
  if (head.lexical() && head.entry->template_name == "p0" &&
      !head.entry->provenance.derived())
    for (std::size_t i = 0; i < dtrs.size(); ++i)
      if (e.roles[i].role == Role::complement &&
          neuter_pronoun(forest.edge(e.daughters[i]).sign.fs, 0))
        fail("p0", "base preposition with a neuter pronoun complement");
}

} // namespace

std::vector<Finding> audit_forest(const Forest &forest) {
  std::vector<Finding> out;
  for (const Edge &e : forest.edges)
    if (!e.lexical())
      audit_edge(forest, e, out);
  return out;
}

std::vector<int> subtree(const Forest &forest, int root) {
  std::vector<int> out;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    int id = stack.back();
    stack.pop_back();
    if (std::find(out.begin(), out.end(), id) != out.end())
      continue;
    out.push_back(id);
    const auto &ds = forest.edge(id).daughters;
    for (auto it = ds.rbegin(); it != ds.rend(); ++it)
      stack.push_back(*it);
  }
  return out;
}

std::vector<std::variant<FillerGapChain, Finding>>
trace_fillers(const Forest &forest, int root) {
  std::vector<std::variant<FillerGapChain, Finding>> out;
  for (int id : subtree(forest, root)) {
    const Edge &e = forest.edge(id);
    if (e.schema != "III" && e.schema != "IIIb")
      continue;
    auto fail = [&](std::string detail) {
      out.push_back(Finding{id, "filler-gap", std::move(detail)});
    };
    const auto &g = *e.config;
    const auto dtrs = config_daughters(g);
    auto f = std::find_if(e.roles.begin(), e.roles.end(), [](const DaughterRole &r) {
      return r.role == Role::filler;
    });
    const int b = e.binding.daughter, m = e.binding.member;
    if (f == e.roles.end() || b < 0 || static_cast<std::size_t>(b) >= dtrs.size()) {
      fail("no filler or binding");
      continue;
    }
    const std::size_t fi = f - e.roles.begin();
    auto members = grammar::inher_slash(g, dtrs[b]);
    auto local = g.resolve_path(path::local, dtrs[fi]);
    if (m < 0 || static_cast<std::size_t>(m) >= members.size() || !local ||
        members[m] != *local) {
      fail("filler LOCAL is not token-identical to the bound member");
      continue;
    }

    FillerGapChain chain{id, e.daughters[fi], {}, {}};
    GapLink at{e.daughters[b], m};
    bool ok = true;
    while (ok) {
      chain.path.push_back(at);
      const Edge &cur = forest.edge(at.edge);
      if (cur.lexical()) {
        auto here = grammar::inher_slash(cur.sign.fs, 0);
        if (!cur.entry->provenance.derived() ||
            static_cast<std::size_t>(at.member) >= here.size()) {
          fail("SLASH member reaches a word no rule introduced it on");
          ok = false;
        } else {
          chain.rule = cur.entry->provenance.rule;
        }
        break;
      }
      const auto &cg = *cur.config;
      auto cd = config_daughters(cg);
      auto mother_members = grammar::inher_slash(cg, *cg.resolve_path("MOTHER"));
      if (static_cast<std::size_t>(at.member) >= mother_members.size()) {
        fail("SLASH member index out of range on edge " +
             std::to_string(cur.id));
        ok = false;
        break;
      }
      NodeId x = mother_members[at.member];
      std::vector<GapLink> sources;
      for (std::size_t i = 0; i < cd.size(); ++i) {
        auto ms = grammar::inher_slash(cg, cd[i]);
        for (std::size_t j = 0; j < ms.size(); ++j)
          if (ms[j] == x)
            sources.push_back({cur.daughters[i], static_cast<int>(j)});
      }
      if (sources.size() != 1) {
        fail("SLASH member on edge " + std::to_string(cur.id) + " comes from " +
             std::to_string(sources.size()) + " daughters");
        ok = false;
        break;
      }
      at = sources.front();
    }
    if (ok)
      out.push_back(std::move(chain));
  }
  return out;
}

} // namespace strand::parser
