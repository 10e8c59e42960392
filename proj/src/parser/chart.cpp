#include "strand/parser/chart.hpp"
#include "strand/parser/lp.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace strand::parser {

UnknownWords::UnknownWords(std::vector<std::string> w)
    : std::runtime_error([&] {
        std::string msg = "unknown word(s):";
        for (const auto &x : w)
          msg += " " + x;
        return msg;
      }()),
      words(std::move(w)) {}

bool is_root(const Edge &e, std::size_t n_tokens) {
  return e.start == 0 && static_cast<std::size_t>(e.end) == n_tokens &&
         grammar::is_saturated(e.sign) && grammar::is_finite(e.sign) &&
         grammar::sort_at(e.sign.fs, 0, grammar::path::inher_slash) == "eset";
}

std::vector<std::string> tokenize(std::string_view sentence) {
  std::istringstream in{std::string(sentence)};
  std::vector<std::string> out;
  for (std::string w; in >> w;)
    out.push_back(lexicon::lowercase(w));
  return out;
}

namespace {

// An incomplete configuration: the head plus the daughters attached so far.
// Items grow rightwards first; once a daughter is added on the left they
// only grow leftwards, so each daughter sequence is built one way only.
struct Item {
  Schema schema;
  std::vector<int> dtrs;
  std::vector<DaughterRole> roles;
  std::size_t head = 0;
  bool left_phase = false;
};

struct CellResult {
  std::vector<Item> items;
  std::vector<Edge> edges;
  std::vector<Attempt> attempts;
};

class Chart {
public:
  Chart(const lexicon::Lexicon &lex, const ParseOptions &options, Forest &forest)
      : lex_(lex), options_(options), forest_(forest),
        n_(static_cast<int>(forest.tokens.size())),
        edges_((n_ + 1) * (n_ + 1)), items_((n_ + 1) * (n_ + 1)) {}

  void run() {
    for (int i = 0; i < n_; ++i) {
      std::vector<Edge> words;
      for (const auto *entry : lex_.lookup(forest_.tokens[i])) {
        Edge e;
        e.start = i;
        e.end = i + 1;
        e.sign = entry->sign;
        e.schema = "lexical";
        e.entry = entry;
        words.push_back(std::move(e));
      }
      CellResult r;
      r.edges = std::move(words);
      merge(i, i + 1, std::move(r));
    }
    for (int len = 2; len <= n_ && !forest_.truncated; ++len) {
      const int cells = n_ - len + 1;
      std::vector<CellResult> results(cells);
      run_cells(cells, [&](int start) {
        results[start] = fill(start, start + len);
      });
      for (int start = 0; start < cells && !forest_.truncated; ++start)
        merge(start, start + len, std::move(results[start]));
    }
    for (const Edge &e : forest_.edges)
      if (is_root(e, n_))
        forest_.roots.push_back(e.id);
  }

private:
  std::size_t cell(int start, int end) const { return start * (n_ + 1) + end; }

  template <class F> void run_cells(int cells, F &&work) {
    const unsigned threads =
        std::max(1u, std::min<unsigned>(options_.threads, cells));
    if (threads == 1) {
      for (int c = 0; c < cells; ++c)
        work(c);
      return;
    }
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (int c; (c = next++) < cells;) {
          try {
            work(c);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error)
              error = std::current_exception();
          }
        }
      });
    for (auto &t : pool)
      t.join();
    if (error)
      std::rethrow_exception(error);
  }

  std::vector<Daughter> daughters(const Item &item) const {
    std::vector<Daughter> out;
    for (std::size_t i = 0; i < item.dtrs.size(); ++i)
      out.push_back({&forest_.edges[item.dtrs[i]].sign, item.roles[i]});
    return out;
  }

  void note(CellResult &r, int start, int end, const Item &item,
            std::string reason) const {
    if (!options_.explain)
      return;
    r.attempts.push_back(
        {start, end, std::string(schema_name(item.schema)), item.dtrs,
         std::move(reason)});
  }

  // All role assignments open to a new daughter of `item`.
  std::vector<DaughterRole> candidate_roles(const Item &item) const {
    const Sign &head = forest_.edges[item.dtrs[item.head]].sign;
    std::vector<DaughterRole> out;
    auto taken = [&](Role r, int i) {
      for (const auto &x : item.roles)
        if (x.role == r && x.index == i)
          return true;
      return false;
    };
    for (auto [role, list] : {std::pair{Role::subject, grammar::path::subj},
                              std::pair{Role::complement, grammar::path::comps},
                              std::pair{Role::specifier, grammar::path::spr}}) {
      if (!role_allowed(item.schema, role, head))
        continue;
      auto n = grammar::valence(head.fs, 0, list).size();
      for (std::size_t i = 0; i < n; ++i)
        if (!taken(role, static_cast<int>(i)))
          out.push_back({role, static_cast<int>(i)});
    }
    for (Role role : {Role::filler, Role::adjunct})
      if (role_allowed(item.schema, role, head))
        out.push_back({role, -1});
    return out;
  }

  void extend(CellResult &r, int start, int end, const Item &item, int edge,
              bool right) const {
    for (DaughterRole role : candidate_roles(item)) {
      Item next = item;
      if (right) {
        next.dtrs.push_back(edge);
        next.roles.push_back(role);
      } else {
        next.dtrs.insert(next.dtrs.begin(), edge);
        next.roles.insert(next.roles.begin(), role);
        ++next.head;
        next.left_phase = true;
      }
      auto ds = daughters(next);
      if (auto why = lp_violation(next.schema, ds, next.head)) {
        note(r, start, end, next, "LP: " + *why);
        continue;
      }
      auto built = combine(next.schema, ds, next.head, false);
      if (auto *rej = std::get_if<Rejection>(&built)) {
        note(r, start, end, next, rej->reason);
        continue;
      }
      complete(r, start, end, next, ds);
      r.items.push_back(std::move(next));
    }
  }

  void complete(CellResult &r, int start, int end, const Item &item,
                const std::vector<Daughter> &ds) const {
    if (!inventory_complete(item.schema, ds, item.head))
      return;
    auto bs = bindings(item.schema, ds, item.head);
    const bool binds = item.schema == Schema::III || item.schema == Schema::IIIb;
    if (!binds)
      bs = {Binding{}};
    else if (bs.empty())
      note(r, start, end, item, "nothing for the filler to bind");
    for (const Binding &b : bs) {
      auto built = combine(item.schema, ds, item.head, true, b);
      if (auto *rej = std::get_if<Rejection>(&built)) {
        note(r, start, end, item, rej->reason);
        continue;
      }
      auto &done = std::get<Built>(built);
      Edge e;
      e.start = start;
      e.end = end;
      e.sign = std::move(done.mother);
      e.schema = std::string(schema_name(item.schema));
      e.daughters = item.dtrs;
      e.roles = item.roles;
      e.head = item.head;
      e.binding = b;
      e.config = std::move(done.config);
      r.edges.push_back(std::move(e));
    }
  }

  CellResult fill(int start, int end) const {
    CellResult r;
    for (int mid = start + 1; mid < end; ++mid) {
      for (const Item &item : items_[cell(start, mid)])
        if (!item.left_phase)
          for (int e : edges_[cell(mid, end)])
            extend(r, start, end, item, e, true);
      for (int e : edges_[cell(start, mid)])
        for (const Item &item : items_[cell(mid, end)])
          extend(r, start, end, item, e, false);
    }
    return r;
  }

  static std::string key(const Edge &e) {
    std::string k = e.schema + "|";
    for (std::size_t i = 0; i < e.daughters.size(); ++i)
      k += std::to_string(e.daughters[i]) + ":" +
           std::string(grammar::role_name(e.roles[i].role)) +
           std::to_string(e.roles[i].index) + ",";
    if (e.entry)
      k += e.entry->id;
    return k + "|" + e.sign.fs.canonical_key();
  }

  void merge(int start, int end, CellResult r) {
    auto &cell_edges = edges_[cell(start, end)];
    auto &cell_items = items_[cell(start, end)];
    std::set<std::string> seen;
    for (Edge &e : r.edges) {
      if (!seen.insert(key(e)).second)
        continue;
      if (forest_.edges.size() >= options_.edge_limit) {
        forest_.truncated = true;
        break;
      }
      e.id = static_cast<int>(forest_.edges.size());
      cell_edges.push_back(e.id);
      forest_.edges.push_back(std::move(e));
    }
    cell_items = std::move(r.items);
    for (int id : cell_edges) {
      const Sign &s = forest_.edges[id].sign;
      for (Schema schema : all_schemas) {
        if (schema == Schema::IIIb && options_.disable_iiib)
          continue;
        if (head_admissible(schema, s))
          cell_items.push_back(Item{schema, {id}, {{Role::head, -1}}, 0, false});
      }
    }
    for (auto &a : r.attempts)
      forest_.attempts.push_back(std::move(a));
  }

  const lexicon::Lexicon &lex_;
  const ParseOptions &options_;
  Forest &forest_;
  int n_;
  std::vector<std::vector<int>> edges_;
  std::vector<std::vector<Item>> items_;
};

} // namespace

Forest parse(const lexicon::Lexicon &lex, const std::vector<std::string> &tokens,
             const ParseOptions &options) {
  std::vector<std::string> unknown;
  for (const auto &t : tokens)
    if (lex.lookup(t).empty() &&
        std::find(unknown.begin(), unknown.end(), t) == unknown.end())
      unknown.push_back(t);
  if (!unknown.empty())
    throw UnknownWords(std::move(unknown));
  Forest forest;
  forest.tokens = tokens;
  Chart(lex, options, forest).run();
  return forest;
}

} // namespace strand::parser
