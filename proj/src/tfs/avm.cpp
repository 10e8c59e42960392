#include "strand/tfs/avm.hpp"
#include "strand/tfs/workspace.hpp"

#include <cctype>
#include <map>

namespace strand::tfs {

namespace {

class Renderer {
public:
  explicit Renderer(const FeatureStructure &f)
      : f_(f), sig_(f.hierarchy()), degree_(f.in_degrees()),
        tag_(f.size(), 0) {
    first_ = sig_.find_feature("FIRST");
    rest_ = sig_.find_feature("REST");
  }

  std::string run() {
    std::string out = value(f_.root(), 0);
    for (const NegConstraint &c : f_.constraints()) {
      Path p = path_to(c.anchor).value_or(Path{});
      p.insert(p.end(), c.path.begin(), c.path.end());
      out += "\nNOT ";
      for (std::size_t i = 0; i < p.size(); ++i)
        out += (i ? "|" : "") + sig_.feature_name(p[i]);
      out += " : " + render_avm(*c.forbidden);
    }
    return out;
  }

private:
  std::optional<Path> path_to(NodeId target) const {
    std::vector<bool> seen(f_.size(), false);
    Path path;
    auto rec = [&](auto &&self, NodeId n) -> bool {
      if (n == target)
        return true;
      if (seen[n])
        return false;
      seen[n] = true;
      for (const Arc &a : f_.node(n).arcs) {
        path.push_back(a.feature);
        if (self(self, a.target))
          return true;
        path.pop_back();
      }
      return false;
    };
    if (rec(rec, f_.root()))
      return path;
    return std::nullopt;
  }

  bool shared(NodeId n) const { return degree_[n] > 1; }

  // Chain cells (after the first) must be unshared and plain FIRST/REST.
  bool chain_form(NodeId n, std::string_view ne, std::string_view empty,
                  std::vector<NodeId> &items, std::optional<NodeId> &tail) const {
    if (!first_ || !rest_)
      return false;
    const auto &name = f_.sort_name(n);
    if (name == empty && f_.node(n).arcs.empty())
      return true;
    if (name != ne)
      return false;
    NodeId cur = n;
    while (true) {
      const Node &cell = f_.node(cur);
      auto first = f_.arc(cur, *first_);
      auto rest = f_.arc(cur, *rest_);
      if (f_.sort_name(cur) != ne || cell.arcs.size() != 2 || !first || !rest)
        return cur != n && (tail = cur, true);
      items.push_back(*first);
      NodeId next = *rest;
      if (shared(next) || tag_[next]) {
        tail = next;
        return true;
      }
      if (f_.sort_name(next) == empty && f_.node(next).arcs.empty())
        return true;
      cur = next;
    }
  }

  std::string value(NodeId n, std::size_t col) {
    std::string prefix;
    if (shared(n)) {
      if (tag_[n])
        return "#" + std::to_string(tag_[n]);
      tag_[n] = ++tags_;
      prefix = "#" + std::to_string(tag_[n]) + "=";
    }
    col += prefix.size();

    std::vector<NodeId> items;
    std::optional<NodeId> tail;
    for (auto [ne, empty, open, close] :
         {std::tuple{"nelist", "elist", "<", ">"},
          std::tuple{"neset", "eset", "{", "}"}}) {
      items.clear();
      tail.reset();
      if (!chain_form(n, ne, empty, items, tail))
        continue;
      // items start two columns right of the bracket; multi-line items
      // put every item on a line of its own
      const std::size_t inner = col + 2;
      std::vector<std::string> parts;
      bool multiline = false;
      for (NodeId item : items)
        parts.push_back(value(item, inner));
      if (tail)
        parts.push_back("| " + value(*tail, inner + 2));
      for (const auto &p : parts)
        multiline = multiline || p.find('\n') != std::string::npos;
      std::string out = prefix + open;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        bool is_tail = tail && i + 1 == parts.size();
        if (i == 0)
          out += " ";
        else if (multiline)
          out += (is_tail ? "\n" : ",\n") + std::string(inner, ' ');
        else
          out += is_tail ? " " : ", ";
        out += parts[i];
      }
      out += std::string(" ") + close;
      return out;
    }

    const Node &node = f_.node(n);
    std::string out = prefix + f_.sort_name(n);
    if (node.arcs.empty())
      return out;
    std::string pad(col, ' ');
    for (std::size_t i = 0; i < node.arcs.size(); ++i) {
      const auto &feat = sig_.feature_name(node.arcs[i].feature);
      out += "\n" + pad + (i ? "  " : "[ ") + feat + " ";
      out += value(node.arcs[i].target, col + 3 + feat.size());
    }
    out += " ]";
    return out;
  }

  const FeatureStructure &f_;
  const SortHierarchy &sig_;
  std::vector<std::size_t> degree_;
  std::vector<int> tag_;
  int tags_ = 0;
  std::optional<FeatureId> first_, rest_;
};

class Parser {
public:
  Parser(const SignaturePtr &sig, std::string_view text)
      : sig_(sig), text_(text), ws_(sig) {}

  FeatureStructure run(std::size_t *consumed, bool constraints) {
    NodeId root = value();
    while (constraints && peek_word() == "NOT") {
      word();
      Path path;
      skip();
      if (!at(':')) {
        path.push_back(feature(word()));
        while (skip(), at('|')) {
          ++pos_;
          path.push_back(feature(word()));
        }
      }
      expect(':');
      std::size_t used = 0;
      auto forbidden = std::make_shared<const FeatureStructure>(
          Parser(sig_, text_.substr(pos_)).run(&used, false));
      pos_ += used;
      ws_.add_constraint(root, std::move(path), std::move(forbidden));
    }
    skip();
    if (consumed)
      *consumed = pos_;
    return ws_.extract(root);
  }

private:
  [[noreturn]] void error(const std::string &what) const {
    throw AvmSyntaxError("AVM offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }
  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void expect(char c) {
    skip();
    if (!at(c))
      error(std::string("expected `") + c + "`");
    ++pos_;
  }
  static bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '-' ||
           c == '_' || c == '*' || c == '+';
  }
  std::string_view peek_word() {
    skip();
    std::size_t end = pos_;
    while (end < text_.size() && word_char(text_[end]))
      ++end;
    return text_.substr(pos_, end - pos_);
  }
  std::string_view word() {
    auto w = peek_word();
    if (w.empty())
      error("expected a name");
    pos_ += w.size();
    return w;
  }
  FeatureId feature(std::string_view w) const {
    auto f = sig_->find_feature(w);
    if (!f)
      error("unknown feature `" + std::string(w) + "`");
    return *f;
  }

  NodeId value() {
    skip();
    if (at('#')) {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      if (start == pos_)
        error("expected tag number");
      int tag = std::stoi(std::string(text_.substr(start, pos_ - start)));
      if (!at('=')) {
        auto it = tags_.find(tag);
        if (it != tags_.end())
          return it->second;
        return tags_[tag] = ws_.fresh(sig_->top());
      }
      ++pos_;
      NodeId v = body();
      if (auto it = tags_.find(tag); it != tags_.end()) {
        if (!ws_.unify(it->second, v))
          error("inconsistent values for tag #" + std::to_string(tag));
        return it->second;
      }
      return tags_[tag] = v;
    }
    return body();
  }

  NodeId chain(char close, bool set) {
    std::vector<NodeId> items;
    std::optional<NodeId> tail;
    skip();
    if (!at(close)) {
      while (true) {
        if (at('|')) {
          ++pos_;
          tail = value();
          skip();
          break;
        }
        items.push_back(value());
        skip();
        if (at(',')) {
          ++pos_;
          skip();
          continue;
        }
        if (at('|'))
          continue;
        break;
      }
    }
    expect(close);
    NodeId out = set ? ws_.make_set(items) : ws_.make_list(items);
    if (tail) {
      // splice the tail in place of the terminal empty cell
      if (items.empty())
        return *tail;
      auto rest = sig_->feature("REST");
      NodeId cell = out;
      for (std::size_t i = 1; i < items.size(); ++i)
        cell = *ws_.arc(cell, rest);
      ws_.set_arc(cell, rest, *tail);
    }
    return out;
  }

  NodeId body() {
    skip();
    if (at('<')) {
      ++pos_;
      return chain('>', false);
    }
    if (at('{')) {
      ++pos_;
      return chain('}', true);
    }
    auto name = word();
    auto s = sig_->find_sort(name);
    if (!s)
      error("unknown sort `" + std::string(name) + "`");
    NodeId n = ws_.fresh(*s);
    skip();
    if (!at('['))
      return n;
    ++pos_;
    while (true) {
      skip();
      if (at(']')) {
        ++pos_;
        break;
      }
      if (at(',')) {
        ++pos_;
        continue;
      }
      Path steps{feature(word())};
      while (skip(), at('|')) {
        ++pos_;
        steps.push_back(feature(word()));
      }
      const FeatureId f = steps.back();
      steps.pop_back();
      NodeId v = value();
      try {
        NodeId owner = steps.empty() ? n : ws_.ensure(n, steps);
        if (auto existing = ws_.arc(owner, f)) {
          if (!ws_.unify(*existing, v))
            error("conflicting values for " + sig_->feature_name(f));
        } else {
          ws_.set_arc(owner, f, v);
        }
      } catch (const AppropriatenessError &e) {
        error(e.what());
      }
    }
    return n;
  }

  SignaturePtr sig_;
  std::string_view text_;
  std::size_t pos_ = 0;
  Workspace ws_;
  std::map<int, NodeId> tags_;
};

} // namespace

std::string render_avm(const FeatureStructure &f) { return Renderer(f).run(); }

FeatureStructure parse_avm(const SignaturePtr &sig, std::string_view text,
                           std::size_t *consumed) {
  return Parser(sig, text).run(consumed, true);
}

} // namespace strand::tfs
