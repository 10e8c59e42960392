#pragma once

#include "strand/grammar/sign.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace strand::lexicon {

/// Where an entry comes from. Base entries have an empty rule.
struct Provenance {
  std::string rule;    // "SELR", "VCELR", "PCELR" or empty
  std::string base_id; // entry the rule applied to
  int position = -1;   // VCELR complement position

  bool derived() const { return !rule.empty(); }
};

struct LexicalEntry {
  std::string id;
  grammar::Sign sign; // phon holds the single word form
  std::string template_name;
  Provenance provenance;
  bool wh = false;

  const std::string &form() const { return sign.phon.front(); }
};

/// Problems in a lexicon file. `line` is 0 when not tied to a line.
struct LoadError : std::runtime_error {
  LoadError(const std::string &what, std::size_t line = 0,
            std::string entry = {})
      : std::runtime_error(what), line(line), entry(std::move(entry)) {}
  std::size_t line;
  std::string entry;
};

/// An immutable set of entries, looked up by word form.
class Lexicon {
public:
  explicit Lexicon(tfs::SignaturePtr sig) : sig_(std::move(sig)) {}

  const tfs::SignaturePtr &signature() const { return sig_; }
  const std::vector<LexicalEntry> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  /// All entries whose form matches `word`, ignoring case, in entry order.
  std::vector<const LexicalEntry *> lookup(std::string_view word) const;
  const LexicalEntry *find(std::string_view id) const;

  /// Throws LoadError on a duplicate id.
  void add(LexicalEntry entry);

private:
  tfs::SignaturePtr sig_;
  std::vector<LexicalEntry> entries_;
  std::multimap<std::string, std::size_t> by_form_;
  std::map<std::string, std::size_t, std::less<>> by_id_;
};

std::string lowercase(std::string_view s);

/// Parses lexicon text (see docs/lexicon-format.md).
Lexicon parse_lexicon(const tfs::SignaturePtr &sig, std::string_view text,
                      std::string_view source = "<string>");
Lexicon load_lexicon(const tfs::SignaturePtr &sig, const std::string &path);

/// The preposition entry for `pform`, built from the P0 template.
LexicalEntry instantiate_p0(const tfs::SignaturePtr &sig,
                            const std::string &pform);

} // namespace strand::lexicon
