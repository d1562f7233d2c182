#ifndef FSIG_PARSER_HPP
#define FSIG_PARSER_HPP

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fsig/polynomial.hpp"

namespace fsig {

/// Parses a polynomial expression.
///
/// Grammar (whitespace-insensitive):
///   expr   := ['+'|'-'] term { ('+'|'-') term }
///   term   := unary { '*' unary }
///   unary  := '-' unary | power
///   power  := atom [ '^' integer ]
///   atom   := integer | identifier | '(' expr ')'
///
/// Integer literals are reduced mod p. Throws ParseError carrying the
/// offending character offset for syntax errors, unknown variables and
/// exponents above the cap.
Polynomial parse_polynomial(std::string_view text, const PrimeField& field,
                            std::span<const std::string> names);

/// Splits on top-level commas and parses each piece; empty input yields an
/// empty list.
std::vector<Polynomial> parse_polynomial_list(std::string_view text,
                                              const PrimeField& field,
                                              std::span<const std::string> names);

}  // namespace fsig

#endif  // FSIG_PARSER_HPP
