#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace strand::tfs {

using SortId = std::uint16_t;
using FeatureId = std::uint16_t;

/// Raised for malformed grammar declarations and for queries that name an
/// undeclared sort or feature.
struct DeclarationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The grammar signature: a bounded-complete partial order of sorts plus the
/// appropriateness table saying which features a sort may carry.
///
/// Greatest lower bounds are precomputed for every pair at load, which is
/// also where bounded completeness is validated.
class SortHierarchy {
public:
  static constexpr SortId top_sort = 0;

  SortHierarchy();

  static SortHierarchy parse(std::string_view text,
                             std::string_view source = "<string>");
  static SortHierarchy load(const std::filesystem::path &path);

  SortId top() const { return top_sort; }
  std::size_t sort_count() const { return names_.size(); }
  std::size_t feature_count() const { return feature_names_.size(); }

  std::optional<SortId> find_sort(std::string_view name) const;
  SortId sort(std::string_view name) const;
  const std::string &name(SortId s) const { return names_.at(s); }

  std::optional<FeatureId> find_feature(std::string_view name) const;
  FeatureId feature(std::string_view name) const;
  const std::string &feature_name(FeatureId f) const {
    return feature_names_.at(f);
  }

  const std::vector<SortId> &parents(SortId s) const { return parents_.at(s); }

  /// True iff `specific` is `general` or one of its (transitive) subsorts.
  bool subsumes(SortId general, SortId specific) const {
    return below_[specific * names_.size() + general];
  }

  std::optional<SortId> glb(SortId a, SortId b) const;
  std::optional<SortId> glb(std::string_view a, std::string_view b) const;

  /// Value sort for `feature` on nodes of sort `s`, if appropriate.
  std::optional<SortId> appropriate(SortId s, FeatureId feature) const;

  /// Features appropriate for `s`, in feature-id order.
  std::vector<FeatureId> features_of(SortId s) const;

  /// Maximally specific subsorts of `s` (leaves of the hierarchy below s).
  std::vector<SortId> leaves_below(SortId s) const;
  /// `s` and everything below it.
  std::vector<SortId> subsorts(SortId s) const;

private:
  void declare_sort(const std::string &name);
  void finalize(std::string_view source);

  std::vector<std::string> names_;
  std::unordered_map<std::string, SortId> sort_ids_;
  std::vector<std::vector<SortId>> parents_;

  std::vector<std::string> feature_names_;
  std::unordered_map<std::string, FeatureId> feature_ids_;

  // declared (sort, feature) -> value sort
  std::vector<std::unordered_map<FeatureId, SortId>> declared_approp_;
  // inherited closure, indexed like declared_approp_
  std::vector<std::unordered_map<FeatureId, SortId>> approp_;

  // below_[a * n + b] == a is b or a subsort of b
  std::vector<bool> below_;
  // glb_[a * n + b], or no_sort
  std::vector<SortId> glb_;
  static constexpr SortId no_sort = 0xffff;
};

} // namespace strand::tfs
