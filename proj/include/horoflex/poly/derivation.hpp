#ifndef HOROFLEX_POLY_DERIVATION_HPP
#define HOROFLEX_POLY_DERIVATION_HPP

#include "horoflex/poly/substitution.hpp"

#include <map>
#include <optional>
#include <string>

namespace horoflex {

/// A derivation of Q[vars], fixed by its values on the variables
/// (variables without an image are sent to 0) and extended by the Leibniz rule.
class Derivation {
public:
    Derivation() = default;
    explicit Derivation(std::map<std::string, Polynomial> images) : images_(std::move(images)) {}

    const std::map<std::string, Polynomial>& images() const { return images_; }
    Polynomial image(const std::string& var) const;

    /// Variables in the domain or occurring in an image, sorted by name.
    std::vector<std::string> variables() const;

private:
    std::map<std::string, Polynomial> images_;
};

/// D(p) = Σ_v ∂p/∂v · D(v).
Polynomial derivation_apply(const Derivation& D, const Polynomial& p);

/// Smallest n <= bound with D^n(v) = 0 for every variable v, which makes D
/// locally nilpotent on the whole ring. nullopt means no evidence at this
/// bound, not a proof that D is not locally nilpotent.
std::optional<unsigned> is_locally_nilpotent_bounded(const Derivation& D, unsigned bound);

/// The G_a-action exp(t·D): v -> Σ_k t^k D^k(v) / k!.
/// Throws std::invalid_argument when D is not certified nilpotent within
/// `bound` or when `param` is one of D's variables.
Substitution exp_lnd(const Derivation& D, const std::string& param, unsigned bound = 64);

}  // namespace horoflex

#endif  // HOROFLEX_POLY_DERIVATION_HPP
