#include "strand/lexicon/templates.hpp"
#include "strand/tfs/avm.hpp"

#include <sstream>

namespace strand::lexicon {

namespace {

std::string join(const std::vector<std::string> &parts,
                 const std::string &sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i)
    out += (i ? sep : "") + parts[i];
  return out;
}

const std::string nonlocal_closed =
    "NONLOCAL nonlocal[INHER inherited[SLASH { }], TO-BIND to-bind[SLASH { }]]";
// Lexical verbs may head a filler configuration, so TO-BIND stays open.
const std::string nonlocal_verb =
    "NONLOCAL nonlocal[INHER inherited[SLASH { }], TO-BIND to-bind[SLASH set]]";

std::string sign(const std::vector<std::string> &cat,
                 const std::string &content, const std::string &nonlocal) {
  return "sign[SYNSEM synsem[LOCAL local[CAT category[" + join(cat) +
         ", LEX plus], CONTENT " + content + "], " + nonlocal + "]]";
}

std::string saturated(const std::string &head) {
  return "CAT category[HEAD " + head + ", SUBJ < >, COMPS < >, SPR < >]";
}

std::string take(Params &params, const std::string &key,
                 const std::string &fallback = {}) {
  auto it = params.find(key);
  if (it == params.end())
    return fallback;
  std::string v = it->second;
  params.erase(it);
  return v;
}

void require_below(const tfs::SortHierarchy &sig, const std::string &value,
                   const std::string &parent, const std::string &key) {
  auto s = sig.find_sort(value);
  if (!s || !sig.subsumes(sig.sort(parent), *s))
    throw TemplateError(key + " must name a subsort of " + parent + ", got `" +
                        value + "`");
}

std::vector<std::string> split_args(std::string text) {
  std::string inner = text;
  if (!inner.empty() && inner.front() == '<') {
    if (inner.back() != '>')
      throw TemplateError("unterminated argument list `" + text + "`");
    inner = inner.substr(1, inner.size() - 2);
  }
  std::vector<std::string> out;
  std::stringstream in(inner);
  for (std::string item; std::getline(in, item, ',');) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos)
      continue;
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

// `np`, `np:<case>` or `pp:<pform>`; `tag` names the index shared with the
// corresponding semantic role.
std::string argument(const tfs::SortHierarchy &sig, const std::string &spec,
                     int tag, bool complement) {
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string value = colon == std::string::npos ? "" : spec.substr(colon + 1);
  std::string content =
      "CONTENT nom-obj[INDEX #" + std::to_string(tag) + "=index]";
  if (kind == "np") {
    std::vector<std::string> head;
    if (!value.empty()) {
      require_below(sig, value, "case", "np case");
      head.push_back("CASE " + value);
    }
    if (complement)
      head.push_back("R minus");
    return "synsem[LOCAL local[" + saturated("noun[" + join(head) + "]") +
           ", " + content + "]]";
  }
  if (kind == "pp") {
    require_below(sig, value, "pform", "pp form");
    return "synsem[LOCAL local[" + saturated("prep[PFORM " + value + "]") +
           ", " + content + "]]";
  }
  throw TemplateError("unknown argument kind `" + spec + "`");
}

std::string subject_np() {
  return "synsem[LOCAL local[" + saturated("noun[CASE nom]") +
         ", CONTENT nom-obj]]";
}

std::string verb(const tfs::SortHierarchy &sig, Params &params) {
  auto subj = split_args(take(params, "subj", "np:nom"));
  auto comps = split_args(take(params, "comps", "<>"));
  std::string rel = take(params, "rel", "relation");
  require_below(sig, rel, "relation", "rel");
  if (subj.size() > 1)
    throw TemplateError("a verb has at most one subject");
  if (subj.size() + comps.size() > 3)
    throw TemplateError("a verb has at most three arguments");

  int tag = 0;
  std::vector<std::string> subj_items, comp_items, roles;
  for (const auto &s : subj) {
    ++tag;
    subj_items.push_back(argument(sig, s, tag, false));
    roles.push_back("ARG" + std::to_string(tag) + " #" + std::to_string(tag));
  }
  for (const auto &c : comps) {
    ++tag;
    comp_items.push_back(argument(sig, c, tag, true));
    roles.push_back("ARG" + std::to_string(tag) + " #" + std::to_string(tag));
  }
  return sign({"HEAD verb", "SUBJ < " + join(subj_items) + " >",
               "COMPS < " + join(comp_items) + " >", "SPR < >"},
              rel + "[" + join(roles) + "]", nonlocal_verb);
}

// Takes a subject-unsaturated verbal projection and shares its subject and
// content.
std::string aux(const tfs::SortHierarchy &sig, Params &params) {
  std::string vcomp = take(params, "vcomp");
  require_below(sig, vcomp, "vform", "vcomp");
  std::string vp = "synsem[LOCAL local[CAT category[HEAD verb[VFORM " + vcomp +
                   "], SUBJ < #1 >, COMPS < >, SPR < >], CONTENT #2]]";
  return sign({"HEAD verb", "SUBJ < #1=" + subject_np() + " >",
               "COMPS < " + vp + " >", "SPR < >"},
              "#2=content", nonlocal_verb);
}

// te: selects a bare infinitive verb and takes over its complements.
std::string marker(const tfs::SortHierarchy &sig, Params &params, int k) {
  std::string vcomp = take(params, "vcomp", "inf");
  require_below(sig, vcomp, "vform", "vcomp");
  std::vector<std::string> args, shared;
  for (int i = 0; i < k; ++i) {
    args.push_back("#" + std::to_string(i + 3) + "=synsem");
    shared.push_back("#" + std::to_string(i + 3));
  }
  std::string v = "synsem[LOCAL local[CAT category[HEAD verb[VFORM " + vcomp +
                  "], SUBJ < #1 >, COMPS < " + join(shared) +
                  " >, SPR < >, LEX plus], CONTENT #2]]";
  args.push_back(v);
  return sign({"HEAD verb[VFORM te-inf]", "SUBJ < #1=synsem >",
               "COMPS < " + join(args) + " >", "SPR < >"},
              "#2=content", nonlocal_closed);
}

std::string nominal(bool pron) {
  return sign({"HEAD noun[PRON " + std::string(pron ? "plus" : "minus") +
                   (pron ? "" : ", R minus") + "]",
               "SUBJ < >", "COMPS < >", "SPR < >"},
              pron ? "ppro[INDEX index]" : "nom-obj[INDEX index]",
              nonlocal_closed);
}

std::string noun() {
  return sign({"HEAD noun[PRON minus, R minus]", "SUBJ < >", "COMPS < >",
               "SPR < synsem[LOCAL local[CAT category[HEAD det]]] >"},
              "nom-obj[INDEX index]", nonlocal_closed);
}

std::string modifier(const std::string &head, const std::string &target) {
  return sign({"HEAD " + head + "[MOD synsem[LOCAL local[CAT category[" +
                   target + "]]]]",
               "SUBJ < >", "COMPS < >", "SPR < >"},
              "content", nonlocal_closed);
}

tfs::FeatureStructure parse(const tfs::SignaturePtr &sig,
                            const std::string &avm) {
  try {
    return tfs::parse_avm(sig, avm);
  } catch (const tfs::AvmSyntaxError &e) {
    throw TemplateError(e.what());
  }
}

} // namespace

const std::vector<std::string> &template_names() {
  static const std::vector<std::string> names{
      "np", "pron", "det", "noun", "adj", "adv", "p0", "verb", "aux", "marker"};
  return names;
}

std::string p0_avm(const std::string &pform) {
  std::string comp = "synsem[LOCAL local[" +
                     saturated("noun[CASE acc, R minus]") +
                     ", CONTENT #1=nom-obj]]";
  return sign({"HEAD prep[PFORM " + pform + "]", "SUBJ < >",
               "COMPS < " + comp + " >", "SPR < >"},
              "#1", nonlocal_closed) +
         "\nNOT SYNSEM|LOCAL|CONTENT : ppro[INDEX index[GENDER neut]]";
}

std::vector<TemplateSign> build_template(const tfs::SignaturePtr &sig,
                                         const std::string &name,
                                         Params &params) {
  const auto &h = *sig;
  if (name == "np")
    return {{"", parse(sig, nominal(false))}};
  if (name == "pron")
    return {{"", parse(sig, nominal(true))}};
  if (name == "det")
    return {{"", parse(sig, sign({"HEAD det", "SUBJ < >", "COMPS < >",
                                  "SPR < >"},
                                 "content", nonlocal_closed))}};
  if (name == "noun")
    return {{"", parse(sig, noun())}};
  if (name == "adj")
    return {{"", parse(sig, modifier("adj", "HEAD noun, SPR nelist"))}};
  if (name == "adv")
    return {{"", parse(sig, modifier("adv", "HEAD verb"))}};
  if (name == "p0") {
    std::string pform = take(params, "pform");
    require_below(h, pform, "pform", "pform");
    return {{"", parse(sig, p0_avm(pform))}};
  }
  if (name == "verb")
    return {{"", parse(sig, verb(h, params))}};
  if (name == "aux")
    return {{"", parse(sig, aux(h, params))}};
  if (name == "marker") {
    std::string max = take(params, "max", "2");
    int k_max = 0;
    try {
      k_max = std::stoi(max);
    } catch (const std::exception &) {
      throw TemplateError("max must be a number, got `" + max + "`");
    }
    if (k_max < 0 || k_max > 3)
      throw TemplateError("max must be between 0 and 3");
    std::vector<TemplateSign> out;
    for (int k = 0; k <= k_max; ++k) {
      Params copy = params;
      out.push_back({"/" + std::to_string(k), parse(sig, marker(h, copy, k))});
      if (k == k_max)
        params = copy;
    }
    return out;
  }
  throw TemplateError("unknown template `" + name + "`");
}

} // namespace strand::lexicon
