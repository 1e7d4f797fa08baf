#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "bergman/polynomial.hpp"

namespace bergman {

class SymbolParseError : public std::invalid_argument {
public:
    SymbolParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Grammar (whitespace ignored):
//   expr   := term (('+' | '-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' integer)?
//   atom   := number | 'i' | 'z'k | 'conj(' expr ')' | 'abs2(z)' | '(' expr ')'
// Variables z1..zd are one-based.
MixedPoly parse_symbol(const std::string& text, int d);

// Holomorphic polynomial; rejects any conj(...) or abs2 dependence.
HoloPoly parse_polynomial(const std::string& text, int d);

// Canonical form accepted by parse_symbol: terms in graded order joined by " + ",
// coefficients with 17 significant digits, complex ones as "(re+im*i)".
std::string print_symbol(const MixedPoly& p);

} // namespace bergman
