#ifndef HOROFLEX_POLY_SUBSTITUTION_HPP
#define HOROFLEX_POLY_SUBSTITUTION_HPP

#include "horoflex/poly/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace horoflex {

/// Variable -> image. Unlisted variables map to themselves.
using Substitution = std::map<std::string, Polynomial>;

Polynomial substitute(const Polynomial& p, const Substitution& assignment);

/// v -> substitute(first(v), then), over the union of both domains.
Substitution compose(const Substitution& first, const Substitution& then);

/// Value at a point; every occurring variable must be assigned.
Rational evaluate(const Polynomial& p, const std::map<std::string, Rational>& point);

/// Normal form modulo the relations t * t_inv = 1 for the listed pairs:
/// every monomial keeps at most one of t, t_inv.
Polynomial cancel_inverse_pairs(const Polynomial& p, const std::vector<std::pair<std::string, std::string>>& pairs);

/// Witness that F∘action − multiplier·F = quotient·modulus (quotient is zero
/// when no modulus is given).
struct HypersurfaceCertificate {
    bool preserved = false;
    Polynomial image;
    Polynomial multiplier;
    Polynomial quotient;
};

/// Whether the substitution maps the ideal (F) into itself, possibly modulo a
/// relation. The multiplier is tried as 1 and as the exact quotient F∘action / F.
HypersurfaceCertificate preserves_hypersurface(const Polynomial& F, const Substitution& action,
                                               const std::optional<Polynomial>& modulus = std::nullopt);

}  // namespace horoflex

#endif  // HOROFLEX_POLY_SUBSTITUTION_HPP
