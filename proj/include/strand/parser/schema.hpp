#pragma once

#include "strand/grammar/principles.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>

namespace strand::parser {

using grammar::DaughterRole;
using grammar::Role;
using grammar::Sign;

enum class Schema { I, II, III, IIIb, spec, adjunct };

inline constexpr Schema all_schemas[] = {Schema::I,    Schema::II,
                                         Schema::III,  Schema::IIIb,
                                         Schema::spec, Schema::adjunct};

std::string_view schema_name(Schema s);
std::optional<Schema> schema_from_name(std::string_view name);

/// Can `head` head a configuration of this schema at all?
bool head_admissible(Schema s, const Sign &head);

/// Roles a non-head daughter may take in the schema. Valence roles carry
/// index -1 here; the caller tries each position.
bool role_allowed(Schema s, Role r, const Sign &head);

/// Which SLASH member a filler binds: member `member` of the INHER|SLASH of
/// daughter `daughter` (the head for III, a complement for IIIb).
struct Binding {
  int daughter = -1;
  int member = -1;
  friend bool operator==(const Binding &, const Binding &) = default;
};

struct Daughter {
  const Sign *sign;
  DaughterRole role;
};

/// A finished configuration: the mother and the whole local tree.
struct Built {
  Sign mother;
  std::shared_ptr<const tfs::FeatureStructure> config;
};

struct Rejection {
  std::string reason;
};

/// Unifies the daughters (in surface order) as the schema demands. With
/// `complete` the schema's saturation and binding demands must hold too and
/// the mother is built; otherwise only the daughters seen so far are
/// checked and `Built` is left empty.
std::variant<Built, Rejection> combine(Schema s,
                                       std::span<const Daughter> daughters,
                                       std::size_t head, bool complete,
                                       Binding binding = {});

/// Does the schema's daughter inventory (ignoring feature values) count as
/// complete?
bool inventory_complete(Schema s, std::span<const Daughter> daughters,
                        std::size_t head);

/// Candidate bindings for a complete inventory (empty list: the schema binds
/// nothing, use the default Binding).
std::vector<Binding> bindings(Schema s, std::span<const Daughter> daughters,
                              std::size_t head);

} // namespace strand::parser
