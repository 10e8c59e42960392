#include "strand/parser/lp.hpp"

namespace strand::parser {

namespace {

bool verbal(const Daughter &d) { return grammar::is_verbal(*d.sign); }

bool nonfinite_verbal(const Daughter &d) {
  return verbal(d) && !grammar::is_finite(*d.sign);
}

bool prepositional(const Daughter &d) {
  return grammar::sort_at(d.sign->fs, 0, grammar::path::head) == "prep";
}

std::string at(std::size_t i) { return " (daughter " + std::to_string(i) + ")"; }

} // namespace

std::optional<std::string> lp_violation(Schema s,
                                        std::span<const Daughter> daughters,
                                        std::size_t head) {
  const std::size_t n = daughters.size();
  if (n <= 1)
    return std::nullopt;
  const Daughter &h = daughters[head];

  // finite verbal heads come first in I, II and IIIb
  if ((s == Schema::I || s == Schema::II || s == Schema::IIIb) &&
      grammar::is_finite(*h.sign) && head != 0)
    return "finite head must precede its sisters";

  if (s == Schema::III) {
    for (std::size_t i = 0; i < n; ++i)
      if (daughters[i].role.role == Role::filler && i + 1 != head)
        return "filler must immediately precede the head" + at(i);
  }

  // nonfinite verbal complements close the configuration
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (daughters[i].role.role == Role::complement &&
        nonfinite_verbal(daughters[i]))
      return "verbal complement must be rightmost" + at(i);

  if (s == Schema::IIIb) {
    for (std::size_t f = 0; f < n; ++f) {
      if (daughters[f].role.role != Role::filler)
        continue;
      for (std::size_t c = 0; c < f; ++c)
        if (daughters[c].role.role == Role::complement)
          return "filler must precede the complements" + at(c);
    }
  }

  if (prepositional(h))
    for (std::size_t i = 0; i < head; ++i)
      if (daughters[i].role.role == Role::complement)
        return "preposition must precede its complement" + at(i);

  if (s == Schema::spec || s == Schema::adjunct)
    for (std::size_t i = head + 1; i < n; ++i)
      return "nominal head must be final" + at(i);

  // nonfinite verbal heads: non-verbal sisters before the head, verbal
  // complements right after it
  if (nonfinite_verbal(h)) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i == head)
        continue;
      const Daughter &d = daughters[i];
      if (d.role.role == Role::complement && verbal(d)) {
        if (i != head + 1)
          return "verbal complement must follow the head directly" + at(i);
      } else if (i > head) {
        return "non-verbal sister must precede a nonfinite head" + at(i);
      }
    }
  }
  return std::nullopt;
}

} // namespace strand::parser
