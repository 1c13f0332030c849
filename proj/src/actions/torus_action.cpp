#include "horoflex/actions/torus_action.hpp"

#include <stdexcept>

namespace horoflex {

namespace {

std::int64_t residue(std::int64_t x, std::int64_t a) {
    const std::int64_t r = x % a;
    return r < 0 ? r + a : r;
}

}  // namespace

DiagonalTorusAction::DiagonalTorusAction(std::map<std::string, std::int64_t> weights, std::int64_t cyclic_order,
                                         std::map<std::string, std::int64_t> cyclic_weights)
    : weights_(std::move(weights)), cyclic_order_(cyclic_order) {
    if (cyclic_order < 1) throw std::invalid_argument("DiagonalTorusAction: cyclic order must be at least 1");
    for (const auto& [v, w] : weights_) {
        const auto it = cyclic_weights.find(v);
        cyclic_weights_[v] = residue(it == cyclic_weights.end() ? 0 : it->second, cyclic_order);
    }
    for (const auto& [v, c] : cyclic_weights) {
        if (!weights_.count(v)) {
            throw std::invalid_argument("DiagonalTorusAction: cyclic weight for unknown variable '" + v + "'");
        }
    }
}

MonomialWeightReport monomial_weight(const DiagonalTorusAction& A, std::span<const std::string> vars,
                                     const Exponents& exponents) {
    if (vars.size() != exponents.size()) throw std::invalid_argument("monomial_weight: exponent count mismatch");
    MonomialWeightReport r{exponents, Integer(0), 0};
    Integer cyclic(0);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (exponents[i] == 0) continue;
        const auto it = A.weights().find(vars[i]);
        if (it == A.weights().end()) throw std::invalid_argument("monomial_weight: unknown variable '" + vars[i] + "'");
        r.gm_weight += Integer(it->second) * exponents[i];
        cyclic += Integer(A.cyclic_weights().at(vars[i])) * exponents[i];
    }
    Integer red = cyclic % A.cyclic_order();
    if (red < 0) red += A.cyclic_order();
    r.cyclic_residue = red.convert_to<std::int64_t>();
    return r;
}

bool is_invariant(const DiagonalTorusAction& A, const Polynomial& p) {
    for (const auto& [e, c] : p.terms()) {
        const auto r = monomial_weight(A, p.variables(), e);
        if (r.gm_weight != 0 || r.cyclic_residue != 0) return false;
    }
    return true;
}

std::optional<MonomialWeightReport> semi_invariant_weight(const DiagonalTorusAction& A, const Polynomial& p) {
    std::optional<MonomialWeightReport> common;
    for (const auto& [e, c] : p.terms()) {
        auto r = monomial_weight(A, p.variables(), e);
        if (!common) {
            common = std::move(r);
        } else if (r.gm_weight != common->gm_weight || r.cyclic_residue != common->cyclic_residue) {
            return std::nullopt;
        }
    }
    return common;
}

bool commutes(const DiagonalTorusAction&, const DiagonalTorusAction&) {
    return true;
}

}  // namespace horoflex
