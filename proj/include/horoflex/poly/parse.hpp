#ifndef HOROFLEX_POLY_PARSE_HPP
#define HOROFLEX_POLY_PARSE_HPP

#include "horoflex/poly/polynomial.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace horoflex {

class PolynomialParseError : public std::invalid_argument {
public:
    PolynomialParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Parses plain-text polynomials.
///
///     expr   := ['+'|'-'] term (('+'|'-') term)*
///     term   := power ('*' power)*
///     power  := atom ('^' integer)?
///     atom   := integer ('/' integer)? | identifier | '(' expr ')'
///
/// Identifiers are [A-Za-z_][A-Za-z0-9_]*; whitespace is ignored. Variables
/// are declared in order of first appearance.
Polynomial parse_polynomial(std::string_view text);

}  // namespace horoflex

#endif  // HOROFLEX_POLY_PARSE_HPP
