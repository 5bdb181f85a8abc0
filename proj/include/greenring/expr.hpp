#pragma once

// Recursive-descent parser for ring-element expressions.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*' unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' INTEGER)?
//   primary := INTEGER ('/' INTEGER)? | IDENT | '(' expr ')'
//
// Identifiers: Y, Z (also y, z), X1..X{m-1}, and Dickson atoms F_k.

#include <string_view>

#include "greenring/presented.hpp"

namespace greenring {

inline constexpr std::uint64_t kMaxExponent = 1'000'000;

Poly parse_poly(std::string_view src, std::size_t x_arity);

// Parses and evaluates in the ring; the result is in normal form.
RingElement parse_element(std::string_view src, const RingSpecPtr& spec);

}  // namespace greenring
