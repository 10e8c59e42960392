#pragma once

#include "strand/tfs/sort_hierarchy.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace strand::tfs {

using NodeId = std::uint32_t;
using Path = std::vector<FeatureId>;
using SignaturePtr = std::shared_ptr<const SortHierarchy>;

Path parse_path(const SortHierarchy &sig, std::string_view text);
std::string path_string(const SortHierarchy &sig, const Path &path);

struct Arc {
  FeatureId feature;
  NodeId target;
  friend bool operator==(const Arc &, const Arc &) = default;
};

struct Node {
  SortId sort;
  std::vector<Arc> arcs; // sorted by feature
  friend bool operator==(const Node &, const Node &) = default;
};

class FeatureStructure;

/// Forbids the value at `path` (from `anchor`) from being at least as
/// specific as `forbidden`. An undefined value never violates.
struct NegConstraint {
  NodeId anchor = 0;
  Path path;
  std::shared_ptr<const FeatureStructure> forbidden;
};

/// Why a unification (or constraint check) failed.
struct Conflict {
  std::string path;
  std::string left;
  std::string right;
  std::string reason;

  std::string describe() const;
};

/// An immutable, rooted, typed feature structure.
///
/// Node 0 is the root. Node numbering is canonical: structures are only
/// produced by `Workspace::extract`, which numbers nodes in depth-first
/// order over feature-sorted arcs, so two isomorphic structures compare
/// equal node for node.
class FeatureStructure {
public:
  /// The most general structure: a single `top` node.
  explicit FeatureStructure(SignaturePtr sig);

  const SignaturePtr &signature() const { return sig_; }
  const SortHierarchy &hierarchy() const { return *sig_; }

  NodeId root() const { return 0; }
  std::size_t size() const { return nodes_.size(); }
  const Node &node(NodeId n) const { return nodes_.at(n); }
  const std::vector<Node> &nodes() const { return nodes_; }
  SortId sort(NodeId n) const { return nodes_.at(n).sort; }
  const std::string &sort_name(NodeId n) const { return sig_->name(sort(n)); }

  std::optional<NodeId> arc(NodeId n, FeatureId f) const;
  std::optional<NodeId> resolve_path(const Path &path,
                                     NodeId from = 0) const;
  std::optional<NodeId> resolve_path(std::string_view path,
                                     NodeId from = 0) const;

  /// Items of a FIRST/REST chain (list or set) starting at `n`. Stops at the
  /// first node without a FIRST arc.
  std::vector<NodeId> chain_items(NodeId n) const;

  const std::vector<NegConstraint> &constraints() const { return negs_; }

  /// The substructure rooted at `n` as a structure of its own. Constraints
  /// whose anchor or target lies inside the substructure are kept.
  FeatureStructure subgraph(NodeId n) const;

  /// Number of arcs pointing at each node (root counted once extra).
  std::vector<std::size_t> in_degrees() const;

  /// Canonical text key; equal keys iff isomorphic (constraints included).
  std::string canonical_key() const;

  friend bool isomorphic(const FeatureStructure &a, const FeatureStructure &b);

private:
  friend class Workspace;
  FeatureStructure() = default;

  SignaturePtr sig_;
  std::vector<Node> nodes_;
  std::vector<NegConstraint> negs_;
};

bool isomorphic(const FeatureStructure &a, const FeatureStructure &b);

/// Either a structure or the conflict that prevented it.
struct UnifyResult {
  std::optional<FeatureStructure> value;
  std::optional<Conflict> conflict;

  explicit operator bool() const { return value.has_value(); }
  const FeatureStructure &operator*() const { return *value; }
  const FeatureStructure *operator->() const { return &*value; }
};

UnifyResult unify(const FeatureStructure &f, const FeatureStructure &g);

/// True iff every sort, arc and reentrancy demand of `general` holds in
/// `specific`. Negative constraints are not compared.
bool subsumes(const FeatureStructure &general,
              const FeatureStructure &specific);

/// A fresh structure, isomorphic to `f`, sharing nothing with it.
FeatureStructure copy(const FeatureStructure &f);

/// Re-evaluates every negative constraint; the first violation, if any.
std::optional<Conflict> check_constraints(const FeatureStructure &f);

/// Appropriateness and sort well-formedness; a description of the first
/// problem found, if any.
std::optional<std::string> validate(const FeatureStructure &f);

} // namespace strand::tfs
