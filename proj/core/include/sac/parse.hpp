#ifndef SAC_PARSE_HPP
#define SAC_PARSE_HPP

#include <string_view>

#include "sac/gentzen.hpp"

namespace sac {

// Grammar:
//   formula := conj ('|' formula)?          (| binds loosest, right-assoc)
//   conj    := unary ('&' conj)?            (& binds tighter, right-assoc)
//   unary   := '~' unary | atom
//   atom    := 'top' | 'bot' | letter | '(' formula ')'
//   letter  := [a-z][a-zA-Z0-9_]*, excluding keywords
Formula parse_formula(std::string_view text);

// Terms: named constructors with parenthesized arguments plus composition
// `f . g` (right-associative, f after g).
ArrowTerm parse_term(std::string_view text);

// Nets: prefix constructors (ax, bhat_*, chat_*, top_*, bot_*, conj, disj,
// neg_l, neg_r, cut) mirroring the GentzenTerm constructors.
GentzenTerm parse_net(std::string_view text);

// A formula with a single `_` hole; all connectives on the hole's spine must
// equal `expected`.
Context parse_context(std::string_view text, Conn expected);

}  // namespace sac

#endif
