#ifndef HOROFLEX_ACTIONS_TORUS_ACTION_HPP
#define HOROFLEX_ACTIONS_TORUS_ACTION_HPP

#include "horoflex/poly/polynomial.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

namespace horoflex {

/// Diagonal action of G_m × μ_a: (t, ξ) scales variable v by t^{w(v)} ξ^{c(v)}.
class DiagonalTorusAction {
public:
    DiagonalTorusAction() = default;
    DiagonalTorusAction(std::map<std::string, std::int64_t> weights, std::int64_t cyclic_order = 1,
                        std::map<std::string, std::int64_t> cyclic_weights = {});

    const std::map<std::string, std::int64_t>& weights() const { return weights_; }
    std::int64_t cyclic_order() const { return cyclic_order_; }
    /// Residues in [0, a).
    const std::map<std::string, std::int64_t>& cyclic_weights() const { return cyclic_weights_; }

private:
    std::map<std::string, std::int64_t> weights_;
    std::int64_t cyclic_order_ = 1;
    std::map<std::string, std::int64_t> cyclic_weights_;
};

struct MonomialWeightReport {
    Exponents monomial;
    Integer gm_weight;
    /// In [0, a).
    std::int64_t cyclic_residue = 0;
};

/// Weight of the monomial Π vars[i]^exponents[i]. Throws std::invalid_argument
/// for a variable with positive exponent that the action does not know.
MonomialWeightReport monomial_weight(const DiagonalTorusAction& A, std::span<const std::string> vars,
                                     const Exponents& exponents);

/// Every term has G_m-weight 0 and cyclic residue 0.
bool is_invariant(const DiagonalTorusAction& A, const Polynomial& p);

/// Every term has the same weight and residue; returns that common report.
std::optional<MonomialWeightReport> semi_invariant_weight(const DiagonalTorusAction& A, const Polynomial& p);

/// Diagonal actions always commute; the check asks that both actions be
/// given by weights on variables, which is all this type can express.
bool commutes(const DiagonalTorusAction& A, const DiagonalTorusAction& B);

}  // namespace horoflex

#endif  // HOROFLEX_ACTIONS_TORUS_ACTION_HPP
