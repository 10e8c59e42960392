#pragma once

#include "strand/grammar/sign.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace strand::grammar {

enum class Role { head, subject, complement, filler, adjunct, specifier };

std::string_view role_name(Role r);

/// The role a daughter plays; `index` is the valence position it discharges
/// (for subjects, complements and specifiers).
struct DaughterRole {
  Role role = Role::head;
  int index = -1;
  friend bool operator==(const DaughterRole &, const DaughterRole &) = default;
};

/// A mother together with its daughters, all in one graph so that token
/// identity between them is observable.
///
/// The graph root is a `config` node: DTRS lists the daughter signs in
/// surface order, MOTHER (when present) is the phrase they make up.
struct PhraseConfig {
  std::string schema;
  tfs::FeatureStructure graph;
  std::vector<DaughterRole> roles; // parallel to DTRS
  std::size_t head = 0;

  std::vector<NodeId> daughters() const;
  std::optional<NodeId> mother() const;
  NodeId head_daughter() const { return daughters().at(head); }
};

/// Puts independent signs side by side in a fresh configuration; no
/// unification is performed.
PhraseConfig make_config(std::string schema,
                         const std::vector<const Sign *> &daughters,
                         std::vector<DaughterRole> roles, std::size_t head,
                         const Sign *mother = nullptr);

struct Violation {
  std::string principle;
  std::string detail;
  int index = -1;
};

template <class T> using Checked = std::variant<T, Violation>;

template <class T> bool ok(const Checked<T> &c) {
  return std::holds_alternative<T>(c);
}

/// What is left of the head's valence lists once the valence daughters are
/// discharged, as nodes of the configuration graph.
struct ValenceResidue {
  std::vector<NodeId> subj;
  std::vector<NodeId> comps;
  std::vector<NodeId> spr;
};

/// For each valence feature F the head daughter's F value is the mother's F
/// value combined with the SYNSEM values of the F daughters. Daughters may
/// occur in any surface order and discharge any positions; their `index`
/// names the position they fill, and the mother keeps the rest in the
/// head's order. If the configuration has no mother, only the residue is
/// computed.
Checked<ValenceResidue> check_valence(const PhraseConfig &config);

/// The mother's INHER|SLASH is the union of the daughters' INHER|SLASH
/// minus the head daughter's TO-BIND|SLASH, all by token identity. Returns
/// the required mother value.
Checked<std::vector<NodeId>> check_nfp(const PhraseConfig &config);

/// HEAD of the mother is token-identical to HEAD of the head daughter.
std::optional<Violation> check_head_feature(const PhraseConfig &config);

} // namespace strand::grammar
