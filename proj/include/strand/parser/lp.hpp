#pragma once

#include "strand/parser/schema.hpp"

namespace strand::parser {

/// The first linear precedence constraint violated by the daughters (in
/// surface order), if any. Every constraint compares present daughters
/// only, so a violation in a prefix of the daughters is final.
std::optional<std::string> lp_violation(Schema s,
                                        std::span<const Daughter> daughters,
                                        std::size_t head);

inline bool lp_ok(Schema s, std::span<const Daughter> daughters,
                  std::size_t head) {
  return !lp_violation(s, daughters, head);
}

} // namespace strand::parser
