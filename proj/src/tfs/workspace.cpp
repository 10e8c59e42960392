#include "strand/tfs/workspace.hpp"

#include <algorithm>

namespace strand::tfs {

namespace {
constexpr NodeId no_node = static_cast<NodeId>(-1);

std::vector<Arc>::iterator lower(std::vector<Arc> &arcs, FeatureId f) {
  return std::lower_bound(arcs.begin(), arcs.end(), f,
                          [](const Arc &a, FeatureId g) { return a.feature < g; });
}
} // namespace

Workspace::Workspace(SignaturePtr sig) : sig_(std::move(sig)) {}

NodeId Workspace::add(const FeatureStructure &f) {
  const auto offset = static_cast<NodeId>(nodes_.size());
  for (const Node &n : f.nodes()) {
    Node copy{n.sort, n.arcs};
    for (Arc &a : copy.arcs)
      a.target += offset;
    nodes_.push_back(std::move(copy));
    forward_.push_back(static_cast<NodeId>(forward_.size()));
  }
  for (const NegConstraint &c : f.constraints())
    negs_.push_back({c.anchor + offset, c.path, c.forbidden});
  return offset;
}

NodeId Workspace::fresh(SortId sort) {
  nodes_.push_back({sort, {}});
  forward_.push_back(static_cast<NodeId>(forward_.size()));
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId Workspace::find(NodeId n) const {
  NodeId r = n;
  while (forward_[r] != r)
    r = forward_[r];
  while (forward_[n] != r) {
    NodeId next = forward_[n];
    forward_[n] = r;
    n = next;
  }
  return r;
}

std::optional<NodeId> Workspace::arc(NodeId n, FeatureId f) const {
  const auto &arcs = nodes_[find(n)].arcs;
  auto it = std::lower_bound(
      arcs.begin(), arcs.end(), f,
      [](const Arc &a, FeatureId g) { return a.feature < g; });
  if (it == arcs.end() || it->feature != f)
    return std::nullopt;
  return find(it->target);
}

std::optional<NodeId> Workspace::follow(NodeId n, const Path &path) const {
  NodeId cur = find(n);
  for (FeatureId f : path) {
    auto next = arc(cur, f);
    if (!next)
      return std::nullopt;
    cur = *next;
  }
  return cur;
}

std::optional<NodeId> Workspace::follow(NodeId n, std::string_view path) const {
  return follow(n, parse_path(*sig_, path));
}

NodeId Workspace::ensure(NodeId n, const Path &path) {
  NodeId cur = find(n);
  for (FeatureId f : path) {
    if (auto next = arc(cur, f)) {
      cur = *next;
      continue;
    }
    auto value = sig_->appropriate(nodes_[cur].sort, f);
    if (!value)
      throw AppropriatenessError("feature " + sig_->feature_name(f) +
                                 " is not appropriate for sort " +
                                 sig_->name(nodes_[cur].sort));
    NodeId child = fresh(*value);
    auto &arcs = nodes_[cur].arcs;
    arcs.insert(lower(arcs, f), Arc{f, child});
    cur = child;
  }
  return cur;
}

NodeId Workspace::ensure(NodeId n, std::string_view path) {
  return ensure(n, parse_path(*sig_, path));
}

void Workspace::set_arc(NodeId n, FeatureId f, NodeId target) {
  n = find(n);
  target = find(target);
  auto value = sig_->appropriate(nodes_[n].sort, f);
  if (!value)
    throw AppropriatenessError("feature " + sig_->feature_name(f) +
                               " is not appropriate for sort " +
                               sig_->name(nodes_[n].sort));
  Path p{f};
  if (!narrow(target, *value, p))
    throw AppropriatenessError("value of " + sig_->feature_name(f) +
                               " must be of sort " + sig_->name(*value));
  auto &arcs = nodes_[n].arcs;
  auto it = lower(arcs, f);
  if (it != arcs.end() && it->feature == f)
    it->target = target;
  else
    arcs.insert(it, Arc{f, target});
}

void Workspace::fail(const Path &path, std::string left, std::string right,
                     std::string reason) {
  if (!failure_)
    failure_ = Conflict{path_string(*sig_, path), std::move(left),
                        std::move(right), std::move(reason)};
}

bool Workspace::narrow(NodeId n, SortId sort, Path &path) {
  n = find(n);
  auto g = sig_->glb(nodes_[n].sort, sort);
  if (!g) {
    fail(path, sig_->name(nodes_[n].sort), sig_->name(sort), "sort clash");
    return false;
  }
  if (*g == nodes_[n].sort)
    return true;
  nodes_[n].sort = *g;
  auto arcs = nodes_[n].arcs;
  for (const Arc &a : arcs) {
    auto value = sig_->appropriate(*g, a.feature);
    path.push_back(a.feature);
    if (!value) {
      fail(path, sig_->name(*g), sig_->feature_name(a.feature),
           "feature not appropriate");
      return false;
    }
    bool ok = narrow(a.target, *value, path);
    path.pop_back();
    if (!ok)
      return false;
  }
  return true;
}

bool Workspace::unify_rec(NodeId a, NodeId b, Path &path) {
  a = find(a);
  b = find(b);
  if (a == b)
    return true;
  auto g = sig_->glb(nodes_[a].sort, nodes_[b].sort);
  if (!g) {
    fail(path, sig_->name(nodes_[a].sort), sig_->name(nodes_[b].sort),
         "sort clash");
    return false;
  }
  forward_[b] = a;
  std::vector<Arc> moved = std::move(nodes_[b].arcs);
  nodes_[b].arcs.clear();

  for (const Arc &arc : moved) {
    NodeId rep = find(a);
    auto &arcs = nodes_[rep].arcs;
    auto it = lower(arcs, arc.feature);
    if (it != arcs.end() && it->feature == arc.feature) {
      NodeId mine = it->target;
      path.push_back(arc.feature);
      bool ok = unify_rec(mine, arc.target, path);
      path.pop_back();
      if (!ok)
        return false;
    } else {
      arcs.insert(it, arc);
    }
  }

  // the merged node may now carry a more specific sort, which can narrow
  // the values of its arcs (old and newly adopted alike)
  NodeId rep = find(a);
  nodes_[rep].sort = sig_->glb(nodes_[rep].sort, *g).value_or(*g);
  auto arcs = nodes_[rep].arcs;
  for (const Arc &arc : arcs) {
    auto value = sig_->appropriate(nodes_[find(rep)].sort, arc.feature);
    path.push_back(arc.feature);
    if (!value) {
      fail(path, sig_->name(nodes_[find(rep)].sort),
           sig_->feature_name(arc.feature), "feature not appropriate");
      return false;
    }
    bool ok = narrow(arc.target, *value, path);
    path.pop_back();
    if (!ok)
      return false;
  }
  return true;
}

bool Workspace::unify(NodeId a, NodeId b) {
  Path path;
  return unify_rec(a, b, path) && check_constraints();
}

bool Workspace::constrain(NodeId n, SortId sort) {
  Path path;
  return narrow(n, sort, path) && check_constraints();
}

NodeId Workspace::copy_subgraph(NodeId n) {
  std::vector<std::pair<NodeId, NodeId>> map; // old rep -> new
  auto lookup = [&](NodeId old) -> NodeId {
    for (auto &[o, c] : map)
      if (o == old)
        return c;
    return no_node;
  };
  auto rec = [&](auto &&self, NodeId old) -> NodeId {
    old = find(old);
    if (NodeId done = lookup(old); done != no_node)
      return done;
    NodeId c = fresh(nodes_[old].sort);
    map.emplace_back(old, c);
    auto arcs = nodes_[old].arcs;
    for (const Arc &a : arcs) {
      NodeId t = self(self, a.target);
      nodes_[c].arcs.push_back(Arc{a.feature, t});
    }
    return c;
  };
  return rec(rec, n);
}

std::vector<NodeId> Workspace::chain_items(NodeId n) const {
  std::vector<NodeId> out;
  const FeatureId first = sig_->feature("FIRST");
  const FeatureId rest = sig_->feature("REST");
  std::optional<NodeId> cur = find(n);
  std::size_t guard = 0;
  while (cur && guard++ < nodes_.size() + 1) {
    auto f = arc(*cur, first);
    if (!f)
      break;
    out.push_back(*f);
    cur = arc(*cur, rest);
  }
  return out;
}

NodeId Workspace::make_chain(std::span<const NodeId> items, SortId empty,
                             SortId ne) {
  NodeId tail = fresh(empty);
  const FeatureId first = sig_->feature("FIRST");
  const FeatureId rest = sig_->feature("REST");
  for (auto it = items.rbegin(); it != items.rend(); ++it) {
    NodeId cell = fresh(ne);
    set_arc(cell, first, *it);
    set_arc(cell, rest, tail);
    tail = cell;
  }
  return tail;
}

NodeId Workspace::make_list(std::span<const NodeId> items) {
  return make_chain(items, sig_->sort("elist"), sig_->sort("nelist"));
}

NodeId Workspace::make_set(std::span<const NodeId> items) {
  return make_chain(items, sig_->sort("eset"), sig_->sort("neset"));
}

void Workspace::add_constraint(NodeId anchor, Path path,
                               std::shared_ptr<const FeatureStructure> forbidden) {
  negs_.push_back({anchor, std::move(path), std::move(forbidden)});
}

void Workspace::erase_constraints(
    const std::function<bool(const NegConstraint &)> &pred) {
  negs_.erase(std::remove_if(negs_.begin(), negs_.end(),
                             [&](const NegConstraint &c) {
                               NegConstraint view{find(c.anchor), c.path,
                                                  c.forbidden};
                               return pred(view);
                             }),
              negs_.end());
}

bool Workspace::check_constraints() {
  for (const NegConstraint &c : negs_) {
    auto value = follow(c.anchor, c.path);
    if (value && subsumed_by(*c.forbidden, *value)) {
      auto where = nodes_.empty() ? std::nullopt : path_to(0, *value);
      fail(where ? *where : c.path, c.forbidden->canonical_key(),
           sig_->name(sort(*value)),
           "negative constraint violated");
      return false;
    }
  }
  return true;
}

bool Workspace::subsumed_by(const FeatureStructure &general,
                            NodeId specific) const {
  std::vector<NodeId> image(general.size(), no_node);
  std::vector<std::pair<NodeId, NodeId>> stack{{general.root(), find(specific)}};
  while (!stack.empty()) {
    auto [g, s] = stack.back();
    stack.pop_back();
    s = find(s);
    if (image[g] != no_node) {
      if (image[g] != s)
        return false; // reentrancy demanded by `general` is missing
      continue;
    }
    image[g] = s;
    if (!sig_->subsumes(general.sort(g), nodes_[s].sort))
      return false;
    for (const Arc &a : general.node(g).arcs) {
      auto t = arc(s, a.feature);
      if (!t)
        return false;
      stack.emplace_back(a.target, *t);
    }
  }
  return true;
}

std::optional<Path> Workspace::path_to(NodeId from, NodeId to) const {
  to = find(to);
  std::vector<NodeId> seen;
  Path path;
  auto rec = [&](auto &&self, NodeId n) -> bool {
    n = find(n);
    if (n == to)
      return true;
    if (std::find(seen.begin(), seen.end(), n) != seen.end())
      return false;
    seen.push_back(n);
    for (const Arc &a : nodes_[n].arcs) {
      path.push_back(a.feature);
      if (self(self, a.target))
        return true;
      path.pop_back();
    }
    return false;
  };
  if (rec(rec, from))
    return path;
  return std::nullopt;
}

FeatureStructure Workspace::extract(NodeId root) const {
  std::vector<NodeId> number(nodes_.size(), no_node);
  std::vector<NodeId> order;
  std::vector<NodeId> stack{find(root)};
  while (!stack.empty()) {
    NodeId n = find(stack.back());
    stack.pop_back();
    if (number[n] != no_node)
      continue;
    number[n] = static_cast<NodeId>(order.size());
    order.push_back(n);
    const auto &arcs = nodes_[n].arcs;
    for (auto it = arcs.rbegin(); it != arcs.rend(); ++it)
      stack.push_back(find(it->target));
  }

  FeatureStructure out;
  out.sig_ = sig_;
  out.nodes_.reserve(order.size());
  for (NodeId n : order) {
    Node copy{nodes_[n].sort, {}};
    copy.arcs.reserve(nodes_[n].arcs.size());
    for (const Arc &a : nodes_[n].arcs)
      copy.arcs.push_back(Arc{a.feature, number[find(a.target)]});
    out.nodes_.push_back(std::move(copy));
  }

  // constraints are re-anchored at the deepest existing node on their path
  // (the value itself when it exists), so that the same restriction always
  // has the same representation
  for (const NegConstraint &c : negs_) {
    NodeId anchor = find(c.anchor);
    std::size_t step = 0;
    for (; step < c.path.size(); ++step) {
      auto next = arc(anchor, c.path[step]);
      if (!next)
        break;
      anchor = find(*next);
    }
    if (number[anchor] != no_node)
      out.negs_.push_back({number[anchor],
                           Path(c.path.begin() + step, c.path.end()),
                           c.forbidden});
  }
  std::vector<std::string> keys;
  for (auto &c : out.negs_)
    keys.push_back(std::to_string(c.anchor) + "/" +
                   path_string(*sig_, c.path) + "/" +
                   c.forbidden->canonical_key());
  std::vector<std::size_t> idx(out.negs_.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<NegConstraint> sorted;
  for (std::size_t k = 0; k < idx.size(); ++k)
    if (k == 0 || keys[idx[k]] != keys[idx[k - 1]])
      sorted.push_back(out.negs_[idx[k]]);
  out.negs_ = std::move(sorted);
  return out;
}

} // namespace strand::tfs
