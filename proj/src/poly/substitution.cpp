#include "horoflex/poly/substitution.hpp"

#include <algorithm>
#include <stdexcept>

namespace horoflex {

Polynomial substitute(const Polynomial& p, const Substitution& assignment) {
    const auto& vars = p.variables();
    std::vector<std::vector<Polynomial>> powers(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const auto it = assignment.find(vars[i]);
        powers[i].push_back(Polynomial(1LL));
        powers[i].push_back(it != assignment.end() ? it->second : Polynomial::variable(vars[i]));
    }
    Polynomial out;
    for (const auto& [e, c] : p.terms()) {
        Polynomial term(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            auto& cache = powers[i];
            while (cache.size() <= e[i]) cache.push_back(cache.back() * cache[1]);
            term *= cache[e[i]];
        }
        out += term;
    }
    return out;
}

Substitution compose(const Substitution& first, const Substitution& then) {
    Substitution out;
    for (const auto& [v, image] : first) out[v] = substitute(image, then);
    for (const auto& [v, image] : then) {
        if (!first.count(v)) out[v] = image;
    }
    return out;
}

Rational evaluate(const Polynomial& p, const std::map<std::string, Rational>& point) {
    Substitution s;
    for (const auto& v : p.variables()) {
        const auto it = point.find(v);
        if (it == point.end()) {
            if (p.degree_in(v) > 0) throw std::invalid_argument("evaluate: variable '" + v + "' has no value");
            continue;
        }
        s[v] = Polynomial(it->second);
    }
    const Polynomial value = substitute(p, s);
    if (!value.is_constant()) throw std::logic_error("evaluate: result is not constant");
    return value.constant_term();
}

Polynomial cancel_inverse_pairs(const Polynomial& p, const std::vector<std::pair<std::string, std::string>>& pairs) {
    const auto& vars = p.variables();
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (const auto& [t, t_inv] : pairs) {
        const auto a = std::find(vars.begin(), vars.end(), t);
        const auto b = std::find(vars.begin(), vars.end(), t_inv);
        if (a == vars.end() || b == vars.end()) continue;
        slots.emplace_back(a - vars.begin(), b - vars.begin());
    }
    if (slots.empty()) return p;
    Polynomial out;
    for (const auto& [e, c] : p.terms()) {
        Exponents reduced = e;
        for (const auto& [i, j] : slots) {
            const auto common = std::min(reduced[i], reduced[j]);
            reduced[i] -= common;
            reduced[j] -= common;
        }
        out += Polynomial::monomial(vars, std::move(reduced), c);
    }
    return out;
}

HypersurfaceCertificate preserves_hypersurface(const Polynomial& F, const Substitution& action,
                                               const std::optional<Polynomial>& modulus) {
    if (F.is_zero()) throw std::invalid_argument("preserves_hypersurface: F is zero");
    HypersurfaceCertificate cert;
    cert.image = substitute(F, action);

    std::vector<Polynomial> multipliers{Polynomial(1LL)};
    if (auto q = divide_exact(cert.image, F)) multipliers.push_back(*q);

    for (const auto& u : multipliers) {
        const Polynomial difference = cert.image - u * F;
        if (difference.is_zero()) {
            cert = {true, cert.image, u, Polynomial()};
            return cert;
        }
        if (modulus) {
            if (auto q = divide_exact(difference, *modulus)) {
                cert = {true, cert.image, u, *q};
                return cert;
            }
        }
    }
    cert.preserved = false;
    return cert;
}

}  // namespace horoflex
