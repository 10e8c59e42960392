#include "doctest.h"
#include "support.hpp"

using namespace strand;
using namespace strand::test;

namespace {

tfs::FeatureStructure local_of(const tfs::FeatureStructure &fs, tfs::NodeId n) {
  return fs.subgraph(n);
}

tfs::FeatureStructure local_of(std::string_view id) {
  const auto &fs = entry(id).sign.fs;
  return fs.subgraph(*fs.resolve_path(grammar::path::local));
}

// The single SLASH member of a derived entry.
tfs::FeatureStructure member(const lexicon::LexicalEntry &e) {
  auto m = grammar::inher_slash(e.sign.fs, 0);
  REQUIRE(m.size() == 1);
  return local_of(e.sign.fs, m.front());
}

bool binds(const lexicon::LexicalEntry &e, std::string_view filler) {
  return static_cast<bool>(unify(member(e), local_of(filler)));
}

std::vector<std::string> derived_from(const lexicon::Lexicon &lex,
                                      std::string_view base) {
  std::vector<std::string> out;
  for (const auto &e : lex.entries())
    if (e.provenance.base_id == base)
      out.push_back(e.id);
  return out;
}

} // namespace

TEST_SUITE("subject extraction") {
  TEST_CASE("schenkt") {
    auto r = lexrules::apply_selr(entry("schenkt:verb"));
    REQUIRE(r);
    const auto &e = *r.entry;
    const auto &fs = e.sign.fs;
    CHECK(e.id == "schenkt:verb+SELR");
    CHECK(e.provenance.rule == "SELR");
    CHECK(grammar::valence(fs, 0, grammar::path::subj).empty());
    CHECK(grammar::valence(fs, 0, grammar::path::comps).size() == 2);
    auto m = grammar::inher_slash(fs, 0);
    REQUIRE(m.size() == 1);
    CHECK(grammar::sort_at(fs, m[0], "CAT|HEAD|CASE") == "nom");
    CHECK(grammar::sort_at(fs, m[0], "CAT|HEAD|R") == "minus");
    // the extracted subject is still the donor
    CHECK(fs.resolve_path("CONTENT|INDEX", m[0]) ==
          fs.resolve_path("SYNSEM|LOCAL|CONTENT|ARG1"));
    CHECK(grammar::to_bind_slash(fs, 0).empty());
  }

  TEST_CASE("inapplicable without a subject or with a slash") {
    CHECK_FALSE(lexrules::apply_selr(entry("hem:pron")));
    CHECK_FALSE(lexrules::apply_selr(entry("aan:p0")));
    auto r = lexrules::apply_selr(entry("schenkt:verb+SELR"));
    CHECK_FALSE(r);
    CHECK_FALSE(r.reason.empty());
    CHECK_FALSE(lexrules::apply_selr(entry("waarderen:verb+VCELR/0")));
  }
}

TEST_SUITE("complement extraction") {
  TEST_CASE("waarderen object") {
    auto r = lexrules::apply_vcelr(entry("waarderen:verb"), 0);
    REQUIRE(r);
    const auto &fs = r.entry->sign.fs;
    CHECK(r.entry->provenance.position == 0);
    CHECK(grammar::valence(fs, 0, grammar::path::comps).empty());
    CHECK(grammar::valence(fs, 0, grammar::path::subj).size() == 1);
    auto m = grammar::inher_slash(fs, 0);
    REQUIRE(m.size() == 1);
    CHECK(grammar::sort_at(fs, m[0], "CAT|HEAD|R") == "minus");
    CHECK(fs.resolve_path("CONTENT|INDEX", m[0]) ==
          fs.resolve_path("SYNSEM|LOCAL|CONTENT|ARG2"));
  }

  TEST_CASE("the derived entry takes dat but not daar as its filler") {
    const auto &e = entry("waarderen:verb+VCELR/0");
    CHECK(binds(e, "dat:pron"));
    CHECK_FALSE(binds(e, "daar:pron"));
  }

  TEST_CASE("a whole PP can be extracted") {
    auto r = lexrules::apply_vcelr(entry("schenkt:verb"), 1);
    REQUIRE(r);
    const auto &fs = r.entry->sign.fs;
    auto m = grammar::inher_slash(fs, 0);
    REQUIRE(m.size() == 1);
    CHECK(grammar::sort_at(fs, m[0], "CAT|HEAD") == "prep");
    CHECK(grammar::sort_at(fs, m[0], "CAT|HEAD|PFORM") == "aan");
  }

  TEST_CASE("inapplicable cases") {
    CHECK_FALSE(lexrules::apply_vcelr(entry("hem:pron"), 0));
    CHECK_FALSE(lexrules::apply_vcelr(entry("waarderen:verb"), 1));
    CHECK_FALSE(lexrules::apply_vcelr(entry("waarderen:verb"), -1));
    CHECK_FALSE(lexrules::apply_vcelr(entry("waarderen:verb+SELR"), 0));
    CHECK_FALSE(lexrules::apply_vcelr(entry("aan:p0"), 0));
  }
}

TEST_SUITE("preposition complement extraction") {
  TEST_CASE("aan") {
    auto r = lexrules::apply_pcelr(entry("aan:p0"));
    REQUIRE(r);
    const auto &fs = r.entry->sign.fs;
    CHECK(grammar::valence(fs, 0, grammar::path::comps).empty());
    CHECK(fs.constraints().empty());
    auto m = grammar::inher_slash(fs, 0);
    REQUIRE(m.size() == 1);
    CHECK(grammar::sort_at(fs, m[0], "CAT|HEAD|CASE") == "acc");
    CHECK(grammar::sort_at(fs, m[0], "CAT|HEAD|R") == "plus");
    CHECK(fs.resolve_path("CONTENT", m[0]) == fs.resolve_path(grammar::path::content));
    CHECK(grammar::sort_at(fs, 0, grammar::path::content) == "ppro");
    CHECK(grammar::sort_at(fs, 0, "SYNSEM|LOCAL|CONTENT|INDEX|GENDER") == "neut");
    CHECK(grammar::sort_at(fs, 0, grammar::path::to_bind_slash) == "eset");
  }

  TEST_CASE("binds R pronouns only") {
    const auto &aan = entry("aan:p0+PCELR");
    CHECK(binds(aan, "waar:pron"));
    CHECK(binds(aan, "er:pron"));
    CHECK_FALSE(binds(aan, "wat:pron"));
    CHECK_FALSE(binds(aan, "het:pron"));
  }

  TEST_CASE("inapplicable cases") {
    CHECK_FALSE(lexrules::apply_pcelr(entry("schenkt:verb")));
    CHECK_FALSE(lexrules::apply_pcelr(entry("hem:pron")));
    CHECK_FALSE(lexrules::apply_pcelr(entry("op:p0+PCELR")));
  }
}

TEST_SUITE("closure") {
  TEST_CASE("schenkt: subject, object and PP") {
    // hand enumeration: SUBJ is nonempty, COMPS has an R- NP and a PP
    CHECK(derived_from(shipped().closed, "schenkt:verb") ==
          std::vector<std::string>{"schenkt:verb+SELR", "schenkt:verb+VCELR/0",
                                   "schenkt:verb+VCELR/1"});
  }

  TEST_CASE("prepositions, pronouns and nouns") {
    CHECK(derived_from(shipped().closed, "aan:p0") ==
          std::vector<std::string>{"aan:p0+PCELR"});
    CHECK(derived_from(shipped().closed, "op:p0") ==
          std::vector<std::string>{"op:p0+PCELR"});
    for (const auto &e : shipped().base.entries())
      if (e.template_name == "pron" || e.template_name == "noun" ||
          e.template_name == "det" || e.template_name == "np")
        CHECK_MESSAGE(derived_from(shipped().closed, e.id).empty(), e.id);
  }

  TEST_CASE("derived entries follow the base entries in id order") {
    const auto &base = shipped().base;
    const auto &closed = shipped().closed;
    REQUIRE(closed.size() > base.size());
    for (std::size_t i = 0; i < base.size(); ++i)
      CHECK(closed.entries()[i].id == base.entries()[i].id);
    for (std::size_t i = base.size() + 1; i < closed.size(); ++i)
      CHECK(closed.entries()[i - 1].id < closed.entries()[i].id);
  }

  TEST_CASE("closing twice adds nothing") {
    const auto &closed = shipped().closed;
    auto again = lexrules::close_lexicon(closed);
    REQUIRE(again.size() == closed.size());
    for (std::size_t i = 0; i < closed.size(); ++i) {
      CHECK(again.entries()[i].id == closed.entries()[i].id);
      CHECK(isomorphic(again.entries()[i].sign.fs, closed.entries()[i].sign.fs));
    }
  }

  TEST_CASE("rules can be left out") {
    auto none = lexrules::close_lexicon(shipped().base, {false, false, false});
    CHECK(none.size() == shipped().base.size());
    auto only_p = lexrules::close_lexicon(shipped().base, {false, false, true});
    CHECK(only_p.size() == shipped().base.size() + 2);
  }

  TEST_CASE("one slash member per derived entry, none per base entry") {
    for (const auto &e : shipped().closed.entries())
      CHECK_MESSAGE(grammar::inher_slash(e.sign.fs, 0).size() ==
                        (e.provenance.derived() ? 1u : 0u),
                    e.id);
  }

  TEST_CASE("verb rules slash R- material, the preposition rule R+") {
    std::vector<std::string> r_plus, r_minus;
    for (const auto &e : shipped().base.entries())
      if (e.template_name == "pron") {
        const bool plus = grammar::sort_at(e.sign.fs, 0, "SYNSEM|LOCAL|CAT|HEAD|R") == "plus";
        (plus ? r_plus : r_minus).push_back(e.id);
      }
    REQUIRE(r_plus.size() == 3);
    for (const auto &e : shipped().closed.entries()) {
      if (!e.provenance.derived())
        continue;
      const auto m = member(e);
      const bool nominal = m.sort_name(*m.resolve_path("CAT|HEAD")) == "noun";
      if (e.provenance.rule == "PCELR") {
        CHECK(m.sort_name(*m.resolve_path("CAT|HEAD|R")) == "plus");
        CHECK(subsumes(avm("ppro[INDEX index[GENDER neut]]"),
                       m.subgraph(*m.resolve_path("CONTENT"))));
        for (const auto &p : r_minus)
          CHECK_MESSAGE(!binds(e, p), e.id << " binds " << p);
      } else {
        if (nominal)
          CHECK_MESSAGE(m.sort_name(*m.resolve_path("CAT|HEAD|R")) == "minus", e.id);
        for (const auto &p : r_plus)
          CHECK_MESSAGE(!binds(e, p), e.id << " binds " << p);
      }
    }
  }
}
