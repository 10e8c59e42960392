#include "strand/tfs/sort_hierarchy.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace strand::tfs {

namespace {

std::vector<std::string> split_ws(const std::string &line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string w; in >> w;)
    out.push_back(w);
  return out;
}

std::string location(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line) + ": ";
}

} // namespace

SortHierarchy::SortHierarchy() {
  declare_sort("top");
  finalize("<builtin>");
}

void SortHierarchy::declare_sort(const std::string &name) {
  if (sort_ids_.count(name))
    return;
  if (names_.size() >= no_sort)
    throw DeclarationError("too many sorts");
  auto id = static_cast<SortId>(names_.size());
  names_.push_back(name);
  sort_ids_.emplace(name, id);
  parents_.emplace_back();
  declared_approp_.emplace_back();
}

SortHierarchy SortHierarchy::parse(std::string_view text,
                                   std::string_view source) {
  SortHierarchy h;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;

  struct Approp {
    std::string sort, feature, value;
    std::size_t line;
  };
  std::vector<Approp> approps;
  std::vector<std::pair<std::string, std::size_t>> parent_refs;

  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto words = split_ws(line);
    if (words.empty())
      continue;
    if (words[0] == "sort") {
      if (words.size() != 4 || words[2] != "<")
        throw DeclarationError(location(source, lineno) +
                               "expected `sort <child> < <parent>`");
      if (words[1] == "top")
        throw DeclarationError(location(source, lineno) +
                               "`top` cannot have a parent");
      h.declare_sort(words[1]);
      parent_refs.emplace_back(words[3], lineno);
      h.declare_sort(words[3]);
      auto child = h.sort_ids_.at(words[1]);
      auto parent = h.sort_ids_.at(words[3]);
      auto &ps = h.parents_[child];
      if (std::find(ps.begin(), ps.end(), parent) == ps.end())
        ps.push_back(parent);
    } else if (words[0] == "approp") {
      if (words.size() != 4)
        throw DeclarationError(location(source, lineno) +
                               "expected `approp <sort> <FEATURE> <sort>`");
      approps.push_back({words[1], words[2], words[3], lineno});
    } else {
      throw DeclarationError(location(source, lineno) +
                             "unknown declaration `" + words[0] + "`");
    }
  }

  // A parent named only on the right of `<` must itself be declared (or be
  // top); otherwise it is a typo that would silently become a root.
  for (auto &[name, ln] : parent_refs) {
    auto id = h.sort_ids_.at(name);
    if (id != top_sort && h.parents_[id].empty())
      throw DeclarationError(location(source, ln) + "sort `" + name +
                             "` is used as a parent but never declared");
  }

  for (auto &a : approps) {
    auto s = h.find_sort(a.sort);
    auto v = h.find_sort(a.value);
    if (!s || !v)
      throw DeclarationError(location(source, a.line) + "unknown sort in `" +
                             a.sort + " " + a.feature + " " + a.value + "`");
    FeatureId f;
    if (auto it = h.feature_ids_.find(a.feature); it != h.feature_ids_.end()) {
      f = it->second;
    } else {
      f = static_cast<FeatureId>(h.feature_names_.size());
      h.feature_names_.push_back(a.feature);
      h.feature_ids_.emplace(a.feature, f);
    }
    h.declared_approp_[*s][f] = *v;
  }

  h.finalize(source);
  return h;
}

SortHierarchy SortHierarchy::load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    throw DeclarationError("cannot open sort declarations: " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path.filename().string());
}

void SortHierarchy::finalize(std::string_view source) {
  const std::size_t n = names_.size();

  // reflexive-transitive closure of the subsort relation, with cycle check
  below_.assign(n * n, false);
  std::vector<int> state(n, 0); // 0 new, 1 on stack, 2 done
  std::vector<std::vector<SortId>> ancestors(n);
  auto visit = [&](auto &&self, SortId s) -> void {
    if (state[s] == 2)
      return;
    if (state[s] == 1)
      throw DeclarationError(std::string(source) +
                             ": cycle in sort hierarchy through `" +
                             names_[s] + "`");
    state[s] = 1;
    below_[s * n + s] = true;
    for (SortId p : parents_[s]) {
      self(self, p);
      for (std::size_t a = 0; a < n; ++a)
        if (below_[p * n + a])
          below_[s * n + a] = true;
    }
    state[s] = 2;
  };
  for (SortId s = 0; s < n; ++s)
    visit(visit, s);

  for (SortId s = 0; s < n; ++s)
    if (!below_[s * n + top_sort])
      throw DeclarationError(std::string(source) + ": sort `" + names_[s] +
                             "` is not reachable from top");

  // glb table; bounded completeness demands a unique maximal common subsort
  glb_.assign(n * n, no_sort);
  for (SortId a = 0; a < n; ++a) {
    for (SortId b = a; b < n; ++b) {
      std::vector<SortId> common;
      for (SortId c = 0; c < n; ++c)
        if (below_[c * n + a] && below_[c * n + b])
          common.push_back(c);
      std::vector<SortId> maximal;
      for (SortId c : common) {
        bool dominated = std::any_of(common.begin(), common.end(), [&](SortId d) {
          return d != c && below_[c * n + d];
        });
        if (!dominated)
          maximal.push_back(c);
      }
      if (maximal.size() > 1)
        throw DeclarationError(std::string(source) + ": sorts `" + names_[a] +
                               "` and `" + names_[b] +
                               "` have no unique greatest lower bound");
      if (maximal.size() == 1)
        glb_[a * n + b] = glb_[b * n + a] = maximal[0];
    }
  }

  // appropriateness is inherited downward; conflicting values meet by glb
  approp_.assign(n, {});
  for (SortId s = 0; s < n; ++s) {
    for (SortId a = 0; a < n; ++a) {
      if (!below_[s * n + a])
        continue;
      for (auto [f, v] : declared_approp_[a]) {
        auto [it, fresh] = approp_[s].emplace(f, v);
        if (!fresh && it->second != v) {
          auto m = glb_[it->second * n + v];
          if (m == no_sort)
            throw DeclarationError(std::string(source) +
                                   ": inconsistent value sorts for feature `" +
                                   feature_names_[f] + "` on `" + names_[s] +
                                   "`");
          it->second = m;
        }
      }
    }
  }
}

std::optional<SortId> SortHierarchy::find_sort(std::string_view name) const {
  if (auto it = sort_ids_.find(std::string(name)); it != sort_ids_.end())
    return it->second;
  return std::nullopt;
}

SortId SortHierarchy::sort(std::string_view name) const {
  if (auto s = find_sort(name))
    return *s;
  throw DeclarationError("unknown sort `" + std::string(name) + "`");
}

std::optional<FeatureId>
SortHierarchy::find_feature(std::string_view name) const {
  if (auto it = feature_ids_.find(std::string(name)); it != feature_ids_.end())
    return it->second;
  return std::nullopt;
}

FeatureId SortHierarchy::feature(std::string_view name) const {
  if (auto f = find_feature(name))
    return *f;
  throw DeclarationError("unknown feature `" + std::string(name) + "`");
}

std::optional<SortId> SortHierarchy::glb(SortId a, SortId b) const {
  auto g = glb_[a * names_.size() + b];
  if (g == no_sort)
    return std::nullopt;
  return g;
}

std::optional<SortId> SortHierarchy::glb(std::string_view a,
                                         std::string_view b) const {
  return glb(sort(a), sort(b));
}

std::optional<SortId> SortHierarchy::appropriate(SortId s,
                                                 FeatureId feature) const {
  auto &m = approp_.at(s);
  if (auto it = m.find(feature); it != m.end())
    return it->second;
  return std::nullopt;
}

std::vector<FeatureId> SortHierarchy::features_of(SortId s) const {
  std::vector<FeatureId> out;
  for (auto &[f, v] : approp_.at(s))
    out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SortId> SortHierarchy::subsorts(SortId s) const {
  std::vector<SortId> out;
  for (SortId c = 0; c < names_.size(); ++c)
    if (subsumes(s, c))
      out.push_back(c);
  return out;
}

std::vector<SortId> SortHierarchy::leaves_below(SortId s) const {
  std::vector<SortId> out;
  const std::size_t n = names_.size();
  for (SortId c : subsorts(s)) {
    bool leaf = true;
    for (SortId d = 0; d < n && leaf; ++d)
      if (d != c && subsumes(c, d))
        leaf = false;
    if (leaf)
      out.push_back(c);
  }
  return out;
}

} // namespace strand::tfs
