#pragma once

#include "strand/tfs/feature_structure.hpp"

#include <functional>
#include <span>

namespace strand::tfs {

/// Thrown when a structure is built with a feature its sort does not allow.
struct AppropriatenessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mutable graph in which structures are assembled and unified.
///
/// Nodes are merged destructively through union-find forwarding, so a
/// workspace whose unification failed is left in an unspecified (but
/// memory-safe) state and should be discarded. Finished structures leave
/// the workspace through `extract`.
class Workspace {
public:
  explicit Workspace(SignaturePtr sig);

  const SortHierarchy &hierarchy() const { return *sig_; }
  const SignaturePtr &signature() const { return sig_; }

  /// Copies `f` (and its constraints) in; returns the copy's root.
  NodeId add(const FeatureStructure &f);
  NodeId fresh(SortId sort);
  NodeId fresh(std::string_view sort) { return fresh(sig_->sort(sort)); }

  NodeId find(NodeId n) const;
  SortId sort(NodeId n) const { return nodes_[find(n)].sort; }
  std::optional<NodeId> arc(NodeId n, FeatureId f) const;
  std::optional<NodeId> follow(NodeId n, const Path &path) const;
  std::optional<NodeId> follow(NodeId n, std::string_view path) const;

  /// Follows `path`, creating missing arcs with their appropriate value
  /// sorts. Throws AppropriatenessError if a step is not appropriate.
  NodeId ensure(NodeId n, const Path &path);
  NodeId ensure(NodeId n, std::string_view path);

  /// Points `f` of `n` at `target`, replacing any existing arc. The target
  /// is narrowed to the appropriate value sort.
  void set_arc(NodeId n, FeatureId f, NodeId target);
  void set_arc(NodeId n, std::string_view f, NodeId target) {
    set_arc(n, sig_->feature(f), target);
  }

  bool unify(NodeId a, NodeId b);
  /// Narrows the sort of `n`.
  bool constrain(NodeId n, SortId sort);
  bool constrain(NodeId n, std::string_view sort) {
    return constrain(n, sig_->sort(sort));
  }

  /// Deep copy of the subgraph under `n`; internal sharing is preserved.
  NodeId copy_subgraph(NodeId n);

  // FIRST/REST chains
  std::vector<NodeId> chain_items(NodeId n) const;
  NodeId make_list(std::span<const NodeId> items);
  NodeId make_set(std::span<const NodeId> items);

  void add_constraint(NodeId anchor, Path path,
                      std::shared_ptr<const FeatureStructure> forbidden);
  const std::vector<NegConstraint> &constraints() const { return negs_; }
  void erase_constraints(const std::function<bool(const NegConstraint &)> &pred);

  /// Re-checks every constraint; on violation records a conflict whose path
  /// leads from the workspace's first node (when it reaches the value).
  bool check_constraints();

  /// Is the structure at `general` subsumed-into the node `specific`?
  bool subsumed_by(const FeatureStructure &general, NodeId specific) const;

  const std::optional<Conflict> &failure() const { return failure_; }

  /// Canonical immutable copy of everything reachable from `root`.
  FeatureStructure extract(NodeId root) const;

  /// Some path from `from` to `to`, if reachable (depth-first, feature order).
  std::optional<Path> path_to(NodeId from, NodeId to) const;

private:
  bool unify_rec(NodeId a, NodeId b, Path &path);
  bool narrow(NodeId n, SortId sort, Path &path);
  void fail(const Path &path, std::string left, std::string right,
            std::string reason);
  NodeId make_chain(std::span<const NodeId> items, SortId empty, SortId ne);

  SignaturePtr sig_;
  std::vector<Node> nodes_;
  mutable std::vector<NodeId> forward_;
  std::vector<NegConstraint> negs_;
  std::optional<Conflict> failure_;
};

} // namespace strand::tfs
