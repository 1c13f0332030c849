#include "horoflex/poly/derivation.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace horoflex {

Polynomial Derivation::image(const std::string& var) const {
    const auto it = images_.find(var);
    return it == images_.end() ? Polynomial() : it->second;
}

std::vector<std::string> Derivation::variables() const {
    std::set<std::string> vars;
    for (const auto& [v, image] : images_) {
        vars.insert(v);
        for (const auto& w : image.variables()) {
            if (image.degree_in(w) > 0) vars.insert(w);
        }
    }
    return {vars.begin(), vars.end()};
}

Polynomial derivation_apply(const Derivation& D, const Polynomial& p) {
    Polynomial out;
    for (const auto& v : p.variables()) {
        const auto it = D.images().find(v);
        if (it == D.images().end() || it->second.is_zero()) continue;
        out += partial_derivative(p, v) * it->second;
    }
    return out;
}

std::optional<unsigned> is_locally_nilpotent_bounded(const Derivation& D, unsigned bound) {
    if (bound < 1) throw std::invalid_argument("is_locally_nilpotent_bounded: bound must be at least 1");
    unsigned index = 1;
    for (const auto& v : D.variables()) {
        Polynomial iterate = Polynomial::variable(v);
        unsigned n = 0;
        while (!iterate.is_zero()) {
            if (n == bound) return std::nullopt;
            iterate = derivation_apply(D, iterate);
            ++n;
        }
        index = std::max(index, n);
    }
    return index;
}

Substitution exp_lnd(const Derivation& D, const std::string& param, unsigned bound) {
    const auto vars = D.variables();
    if (std::find(vars.begin(), vars.end(), param) != vars.end()) {
        throw std::invalid_argument("exp_lnd: parameter '" + param + "' is a variable of the derivation");
    }
    if (!is_locally_nilpotent_bounded(D, bound)) {
        throw std::invalid_argument("exp_lnd: derivation is not certified locally nilpotent within bound " +
                                    std::to_string(bound));
    }
    const Polynomial t = Polynomial::variable(param);
    Substitution out;
    for (const auto& v : vars) {
        Polynomial iterate = Polynomial::variable(v);
        Polynomial sum;
        Polynomial t_power(1LL);
        Rational factorial(1);
        for (unsigned k = 0; !iterate.is_zero(); ++k) {
            if (k > 0) {
                factorial *= k;
                t_power *= t;
            }
            sum += Polynomial(Rational(1) / factorial) * t_power * iterate;
            iterate = derivation_apply(D, iterate);
        }
        out[v] = std::move(sum);
    }
    return out;
}

}  // namespace horoflex
