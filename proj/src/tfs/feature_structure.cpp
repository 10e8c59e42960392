#include "strand/tfs/feature_structure.hpp"
#include "strand/tfs/workspace.hpp"

#include <algorithm>

namespace strand::tfs {

Path parse_path(const SortHierarchy &sig, std::string_view text) {
  Path out;
  while (!text.empty()) {
    auto bar = text.find('|');
    auto part = text.substr(0, bar);
    if (!part.empty())
      out.push_back(sig.feature(part));
    if (bar == std::string_view::npos)
      break;
    text.remove_prefix(bar + 1);
  }
  return out;
}

std::string path_string(const SortHierarchy &sig, const Path &path) {
  std::string out;
  for (FeatureId f : path) {
    if (!out.empty())
      out += '|';
    out += sig.feature_name(f);
  }
  return out.empty() ? "<root>" : out;
}

std::string Conflict::describe() const {
  return "at " + path + ": " + left + " vs " + right + " (" + reason + ")";
}

FeatureStructure::FeatureStructure(SignaturePtr sig)
    : sig_(std::move(sig)), nodes_{Node{SortHierarchy::top_sort, {}}} {}

std::optional<NodeId> FeatureStructure::arc(NodeId n, FeatureId f) const {
  const auto &arcs = nodes_.at(n).arcs;
  auto it = std::lower_bound(
      arcs.begin(), arcs.end(), f,
      [](const Arc &a, FeatureId g) { return a.feature < g; });
  if (it == arcs.end() || it->feature != f)
    return std::nullopt;
  return it->target;
}

std::optional<NodeId> FeatureStructure::resolve_path(const Path &path,
                                                     NodeId from) const {
  NodeId cur = from;
  for (FeatureId f : path) {
    auto next = arc(cur, f);
    if (!next)
      return std::nullopt;
    cur = *next;
  }
  return cur;
}

std::optional<NodeId> FeatureStructure::resolve_path(std::string_view path,
                                                     NodeId from) const {
  Path p;
  for (std::string_view rest = path; !rest.empty();) {
    auto bar = rest.find('|');
    auto part = rest.substr(0, bar);
    if (!part.empty()) {
      auto f = sig_->find_feature(part);
      if (!f)
        return std::nullopt;
      p.push_back(*f);
    }
    if (bar == std::string_view::npos)
      break;
    rest.remove_prefix(bar + 1);
  }
  return resolve_path(p, from);
}

std::vector<NodeId> FeatureStructure::chain_items(NodeId n) const {
  std::vector<NodeId> out;
  auto first = sig_->find_feature("FIRST");
  auto rest = sig_->find_feature("REST");
  if (!first || !rest)
    return out;
  std::optional<NodeId> cur = n;
  while (cur && out.size() <= nodes_.size()) {
    auto f = arc(*cur, *first);
    if (!f)
      break;
    out.push_back(*f);
    cur = arc(*cur, *rest);
  }
  return out;
}

FeatureStructure FeatureStructure::subgraph(NodeId n) const {
  Workspace ws(sig_);
  NodeId base = ws.add(*this);
  return ws.extract(base + n);
}

std::vector<std::size_t> FeatureStructure::in_degrees() const {
  std::vector<std::size_t> deg(nodes_.size(), 0);
  deg[0] = 1;
  for (const Node &n : nodes_)
    for (const Arc &a : n.arcs)
      ++deg[a.target];
  return deg;
}

std::string FeatureStructure::canonical_key() const {
  std::string out;
  for (const Node &n : nodes_) {
    out += sig_->name(n.sort);
    out += '(';
    for (const Arc &a : n.arcs) {
      out += std::to_string(a.feature);
      out += ':';
      out += std::to_string(a.target);
      out += ' ';
    }
    out += ')';
  }
  for (const NegConstraint &c : negs_) {
    out += "!" + std::to_string(c.anchor) + "/";
    for (FeatureId f : c.path)
      out += std::to_string(f) + ".";
    out += "{" + c.forbidden->canonical_key() + "}";
  }
  return out;
}

bool isomorphic(const FeatureStructure &a, const FeatureStructure &b) {
  if (a.nodes_ != b.nodes_ || a.negs_.size() != b.negs_.size())
    return false;
  for (std::size_t i = 0; i < a.negs_.size(); ++i) {
    const auto &x = a.negs_[i];
    const auto &y = b.negs_[i];
    if (x.anchor != y.anchor || x.path != y.path ||
        !isomorphic(*x.forbidden, *y.forbidden))
      return false;
  }
  return true;
}

UnifyResult unify(const FeatureStructure &f, const FeatureStructure &g) {
  Workspace ws(f.signature());
  NodeId a = ws.add(f);
  NodeId b = ws.add(g);
  if (!ws.unify(a, b))
    return {std::nullopt, ws.failure()};
  return {ws.extract(a), std::nullopt};
}

bool subsumes(const FeatureStructure &general,
              const FeatureStructure &specific) {
  Workspace ws(specific.signature());
  NodeId s = ws.add(specific);
  return ws.subsumed_by(general, s);
}

FeatureStructure copy(const FeatureStructure &f) {
  Workspace ws(f.signature());
  return ws.extract(ws.add(f));
}

std::optional<Conflict> check_constraints(const FeatureStructure &f) {
  Workspace ws(f.signature());
  ws.add(f);
  if (ws.check_constraints())
    return std::nullopt;
  return ws.failure();
}

std::optional<std::string> validate(const FeatureStructure &f) {
  const auto &sig = f.hierarchy();
  for (NodeId n = 0; n < f.size(); ++n) {
    const Node &node = f.node(n);
    if (node.sort >= sig.sort_count())
      return "node " + std::to_string(n) + " has an undeclared sort";
    for (const Arc &a : node.arcs) {
      auto value = sig.appropriate(node.sort, a.feature);
      if (!value)
        return "feature " + sig.feature_name(a.feature) +
               " is not appropriate for sort " + sig.name(node.sort);
      if (!sig.subsumes(*value, f.sort(a.target)))
        return "value of " + sig.feature_name(a.feature) + " on " +
               sig.name(node.sort) + " must be of sort " + sig.name(*value) +
               ", found " + sig.name(f.sort(a.target));
    }
  }
  return std::nullopt;
}

} // namespace strand::tfs
