#ifndef HOROFLEX_POLY_POLYNOMIAL_HPP
#define HOROFLEX_POLY_POLYNOMIAL_HPP

#include "horoflex/lattice/scalar.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace horoflex {

using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order; earlier variables are larger.
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

std::uint64_t total_degree(const Exponents& e);

/// Multivariate polynomial over Q on an ordered list of named variables.
///
/// Binary operations on polynomials over different variable lists first merge
/// the lists (left operand's order, then the right operand's new names).
/// Equality is mathematical: it ignores declared but unused variables.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Rational, GradedLex>;

    Polynomial() = default;
    Polynomial(long long c);  // NOLINT: constants convert implicitly
    Polynomial(const Rational& c);  // NOLINT
    Polynomial(std::vector<std::string> variables, TermMap terms);

    static Polynomial variable(const std::string& name);
    static Polynomial monomial(std::vector<std::string> variables, Exponents exponents, Rational coefficient = 1);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    std::uint64_t total_degree() const;
    std::uint32_t degree_in(std::string_view var) const;

    /// Largest term in graded lex order. Throws on the zero polynomial.
    std::pair<Exponents, Rational> leading_term() const;

    /// Same polynomial over another variable list, which must include every
    /// variable actually occurring.
    Polynomial with_variables(const std::vector<std::string>& vars) const;

    Polynomial pow(unsigned e) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(Polynomial a);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

std::vector<std::string> merged_variables(const std::vector<std::string>& a, const std::vector<std::string>& b);

Polynomial partial_derivative(const Polynomial& p, std::string_view var);

/// q with p = q * d, or nullopt when d does not divide p. Multivariate
/// division by the leading term of d; the remainder decides divisibility.
/// Throws std::domain_error when d is zero.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d);

}  // namespace horoflex

#endif  // HOROFLEX_POLY_POLYNOMIAL_HPP
