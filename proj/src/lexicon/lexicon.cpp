#include "strand/lexicon/lexicon.hpp"
#include "strand/lexicon/templates.hpp"
#include "strand/tfs/avm.hpp"
#include "strand/tfs/workspace.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace strand::lexicon {

std::string lowercase(std::string_view s) {
  std::string out(s);
  for (char &c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::vector<const LexicalEntry *> Lexicon::lookup(std::string_view word) const {
  std::vector<const LexicalEntry *> out;
  auto [lo, hi] = by_form_.equal_range(lowercase(word));
  for (auto it = lo; it != hi; ++it)
    out.push_back(&entries_[it->second]);
  std::sort(out.begin(), out.end());
  return out;
}

const LexicalEntry *Lexicon::find(std::string_view id) const {
  auto it = by_id_.find(id);
  return it == by_id_.end() ? nullptr : &entries_[it->second];
}

void Lexicon::add(LexicalEntry entry) {
  if (by_id_.count(entry.id))
    throw LoadError("duplicate entry id `" + entry.id + "`", 0, entry.id);
  // `entries_` may reallocate; lookups hand out pointers only after loading.
  std::size_t index = entries_.size();
  by_id_.emplace(entry.id, index);
  by_form_.emplace(lowercase(entry.form()), index);
  entries_.push_back(std::move(entry));
}

namespace {

const std::map<std::string, std::string> generic_keys{
    {"gender", "SYNSEM|LOCAL|CONTENT|INDEX|GENDER"},
    {"case", "SYNSEM|LOCAL|CAT|HEAD|CASE"},
    {"r", "SYNSEM|LOCAL|CAT|HEAD|R"},
    {"pron", "SYNSEM|LOCAL|CAT|HEAD|PRON"},
    {"vform", "SYNSEM|LOCAL|CAT|HEAD|VFORM"},
    {"pform", "SYNSEM|LOCAL|CAT|HEAD|PFORM"},
};

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Splits on commas that are not nested in <>, [] or {}.
std::vector<std::string> split_top(std::string_view s) {
  std::vector<std::string> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '<' || c == '[' || c == '{')
      ++depth;
    else if (c == '>' || c == ']' || c == '}')
      --depth;
    else if (c == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  auto last = trim(s.substr(start));
  if (!last.empty() || !out.empty())
    out.push_back(last);
  return out;
}

struct Record {
  std::string form;
  std::string template_name;
  Params params;
};

Record parse_record(const std::string &line) {
  std::istringstream in(line);
  std::string keyword, form, assign;
  in >> keyword >> form >> assign;
  if (keyword != "word" || form.empty() || assign != ":=")
    throw std::runtime_error("expected `word <form> := <template>(...)`");
  std::string rest;
  std::getline(in, rest);
  rest = trim(rest);
  auto open = rest.find('(');
  if (open == std::string::npos || rest.back() != ')')
    throw std::runtime_error("expected `<template>(...)` after `:=`");
  Record r{lowercase(form), trim(rest.substr(0, open)), {}};
  for (const auto &item :
       split_top(std::string_view(rest).substr(open + 1, rest.size() - open - 2))) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("expected `key=value`, got `" + item + "`");
    auto key = trim(item.substr(0, eq));
    auto value = trim(item.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::runtime_error("empty key or value in `" + item + "`");
    if (!r.params.emplace(key, value).second)
      throw std::runtime_error("key `" + key + "` given twice");
  }
  return r;
}

// Unifies `value` (AVM text) into the structure at `path`.
tfs::FeatureStructure apply_override(const tfs::SignaturePtr &sig,
                                     const tfs::FeatureStructure &fs,
                                     const std::string &path,
                                     const std::string &value) {
  tfs::Workspace ws(sig);
  tfs::NodeId root = ws.add(fs);
  tfs::NodeId at = ws.ensure(root, tfs::parse_path(*sig, path));
  tfs::NodeId v = ws.add(tfs::parse_avm(sig, value));
  if (!ws.unify(at, v))
    throw std::runtime_error("value `" + value + "` for " + path +
                             " conflicts with the template: " +
                             ws.failure()->describe());
  return ws.extract(root);
}

void check_entry(const LexicalEntry &e) {
  const auto &fs = e.sign.fs;
  if (auto problem = tfs::validate(fs))
    throw std::runtime_error(*problem);
  if (auto c = tfs::check_constraints(fs))
    throw std::runtime_error("negative constraint violated: " + c->describe());
  if (!grammar::inher_slash(fs, 0).empty() ||
      grammar::sort_at(fs, 0, grammar::path::inher_slash) != "eset")
    throw std::runtime_error("base entries must have INHER|SLASH { }");
  if (e.template_name == "pron") {
    const auto &h = fs.hierarchy();
    for (const char *p : {"SYNSEM|LOCAL|CAT|HEAD|R", "SYNSEM|LOCAL|CAT|HEAD|CASE",
                          "SYNSEM|LOCAL|CONTENT|INDEX|GENDER"}) {
      auto n = fs.resolve_path(p);
      if (!n || h.subsorts(fs.sort(*n)).size() != 1)
        throw std::runtime_error(std::string("pronouns must fully specify ") +
                                 p);
    }
  }
}

std::vector<LexicalEntry> build_entries(const tfs::SignaturePtr &sig,
                                        const Record &r) {
  Params params = r.params;
  bool wh = false;
  if (auto it = params.find("wh"); it != params.end()) {
    if (it->second != "true" && it->second != "false")
      throw std::runtime_error("wh must be true or false");
    wh = it->second == "true";
    params.erase(it);
  }
  auto signs = build_template(sig, r.template_name, params);
  std::vector<LexicalEntry> out;
  for (auto &ts : signs) {
    const std::string id = r.form + ":" + r.template_name + ts.variant;
    tfs::FeatureStructure fs = std::move(ts.fs);
    for (const auto &[key, value] : params) {
      std::string path;
      if (key.find('|') != std::string::npos)
        path = key;
      else if (auto g = generic_keys.find(key); g != generic_keys.end())
        path = g->second;
      else
        throw std::runtime_error("unknown key `" + key + "` for template " +
                                 r.template_name);
      try {
        fs = apply_override(sig, fs, path, value);
      } catch (const std::exception &ex) {
        throw LoadError(id + ": " + ex.what(), 0, id);
      }
    }
    LexicalEntry e{id, grammar::Sign{{r.form}, std::move(fs)}, r.template_name,
                   {}, wh};
    try {
      check_entry(e);
    } catch (const std::exception &ex) {
      throw LoadError(e.id + ": " + ex.what(), 0, e.id);
    }
    out.push_back(std::move(e));
  }
  return out;
}

} // namespace

Lexicon parse_lexicon(const tfs::SignaturePtr &sig, std::string_view text,
                      std::string_view source) {
  Lexicon lex(sig);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    if (trim(line).empty())
      continue;
    auto where = std::string(source) + ":" + std::to_string(lineno) + ": ";
    Record r;
    try {
      r = parse_record(line);
    } catch (const std::exception &ex) {
      throw LoadError(where + ex.what(), lineno);
    }
    try {
      for (auto &e : build_entries(sig, r))
        lex.add(std::move(e));
    } catch (const LoadError &ex) {
      throw LoadError(where + ex.what(), lineno, ex.entry);
    } catch (const std::exception &ex) {
      auto id = r.form + ":" + r.template_name;
      throw LoadError(where + id + ": " + ex.what(), lineno, id);
    }
  }
  return lex;
}

Lexicon load_lexicon(const tfs::SignaturePtr &sig, const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw LoadError("cannot open lexicon " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_lexicon(sig, buf.str(), path);
}

LexicalEntry instantiate_p0(const tfs::SignaturePtr &sig,
                            const std::string &pform) {
  Params params{{"pform", pform}};
  Record r{lowercase(pform), "p0", params};
  try {
    return std::move(build_entries(sig, r).front());
  } catch (const TemplateError &ex) {
    throw LoadError(std::string("instantiate_p0: ") + ex.what(), 0,
                    r.form + ":p0");
  }
}

} // namespace strand::lexicon
