#ifndef HOROFLEX_SL2_EHM_HPP
#define HOROFLEX_SL2_EHM_HPP

#include "horoflex/actions/torus_action.hpp"
#include "horoflex/poly/substitution.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <optional>
#include <vector>

namespace horoflex {

/// Cox-realization data of the normal affine SL2/μ_m-embedding of height
/// h = p/q < 1: the hypersurface D_b = { y^b = x1 x4 − x2 x3 } in variables
/// x1, x2, x3, x4, y with the quotienting group N = G_m × μ_a and the
/// one-parameter subgroup Λ.
struct EHMDatum {
    std::int64_t p = 0, q = 0, m = 0;
    std::int64_t k = 0, a = 0, b = 0;
    Rational height;
    Polynomial hypersurface;  // y^b − x1 x4 + x2 x3
    DiagonalTorusAction n_action;
    DiagonalTorusAction lambda_action;
};

inline const std::vector<std::string>& ehm_variables() {
    static const std::vector<std::string> vars{"x1", "x2", "x3", "x4", "y"};
    return vars;
}

/// Requires gcd(p, q) = 1, 0 < p < q and m >= 1; throws std::invalid_argument otherwise.
EHMDatum build_ehm(std::int64_t p, std::int64_t q, std::int64_t m);

/// x1^s x2^u x3^v x4^w y^z with its Λ-weight τ.
struct InvariantMonomial {
    std::array<std::uint32_t, 5> exponents{};  // s, u, v, w, z
    Integer lambda_weight;
};

/// Every N-invariant monomial of total degree <= degree_bound, by exhaustive
/// search, in lexicographic order of (s, u, v, w, z).
std::vector<InvariantMonomial> enumerate_invariant_monomials(const EHMDatum& d, unsigned degree_bound);

struct WeightIdentityReport {
    bool holds = true;
    std::size_t checked = 0;
    std::optional<InvariantMonomial> offending;
};

/// sp + uq − vq − wp = u(q−p) + w(q−p) + kz >= 0 on every enumerated invariant monomial.
WeightIdentityReport verify_weight_identity(const EHMDatum& d, unsigned degree_bound);

struct SpecialPointReport {
    Rational hypersurface_at_point;
    Polynomial f;  // x1^{aq} x3^{ap}
    bool f_invariant = false;
    Rational f_at_point;
    /// Every enumerated monomial with τ = 0 has z = 0.
    bool fixed_locus_in_y_zero = false;
    std::size_t tau_zero_monomials = 0;

    bool all_pass() const { return hypersurface_at_point == 0 && f_invariant && f_at_point != 0 && fixed_locus_in_y_zero; }
};

/// Checks at the point P = (x1, x2, x3, x4, y) = (1, 0, 1, 0, 0).
SpecialPointReport verify_special_point(const EHMDatum& d, unsigned degree_bound = 10);

struct ActionsReport {
    /// SL2 substitution, modulo αδ − βγ − 1.
    HypersurfaceCertificate sl2;
    bool lambda_invariant = false;
    std::optional<MonomialWeightReport> n_weight;  // common N-weight of the terms of the equation
    Integer y_power_weight, x1x4_weight, x2x3_weight;

    bool all_pass() const {
        return sl2.preserved && lambda_invariant && n_weight.has_value() && y_power_weight == x1x4_weight &&
               x1x4_weight == x2x3_weight;
    }
};

/// The SL2 action of 2x2 matrices (alpha beta; gamma delta) on (x1, x2) and (x3, x4).
Substitution sl2_substitution();

ActionsReport verify_actions_on_Db(const EHMDatum& d);

}  // namespace horoflex

#endif  // HOROFLEX_SL2_EHM_HPP
