#include "horoflex/sl2/ehm.hpp"

#include <numeric>
#include <stdexcept>

namespace horoflex {

EHMDatum build_ehm(std::int64_t p, std::int64_t q, std::int64_t m) {
    if (p < 1 || q < 1 || m < 1) throw std::invalid_argument("build_ehm: p, q, m must be positive");
    if (std::gcd(p, q) != 1) throw std::invalid_argument("build_ehm: p and q must be coprime");
    if (p >= q) throw std::invalid_argument("build_ehm: height p/q must be < 1 (h = 1 is the smooth case)");

    EHMDatum d;
    d.p = p;
    d.q = q;
    d.m = m;
    d.k = std::gcd(q - p, m);
    d.a = m / d.k;
    d.b = (q - p) / d.k;
    d.height = Rational(p, q);

    const auto& vars = ehm_variables();
    const Polynomial x1 = Polynomial::variable("x1"), x2 = Polynomial::variable("x2"),
                     x3 = Polynomial::variable("x3"), x4 = Polynomial::variable("x4"),
                     y = Polynomial::variable("y");
    d.hypersurface = (y.pow(static_cast<unsigned>(d.b)) - x1 * x4 + x2 * x3).with_variables(vars);

    d.n_action = DiagonalTorusAction({{"x1", -p}, {"x2", -p}, {"x3", q}, {"x4", q}, {"y", d.k}}, d.a,
                                     {{"x1", -1}, {"x2", -1}, {"x3", 1}, {"x4", 1}, {"y", 0}});
    d.lambda_action = DiagonalTorusAction({{"x1", p}, {"x2", q}, {"x3", -q}, {"x4", -p}, {"y", 0}});
    return d;
}

std::vector<InvariantMonomial> enumerate_invariant_monomials(const EHMDatum& d, unsigned degree_bound) {
    const auto& vars = ehm_variables();
    std::vector<InvariantMonomial> out;
    Exponents e(5, 0);
    for (std::uint32_t s = 0; s <= degree_bound; ++s) {
        for (std::uint32_t u = 0; s + u <= degree_bound; ++u) {
            for (std::uint32_t v = 0; s + u + v <= degree_bound; ++v) {
                for (std::uint32_t w = 0; s + u + v + w <= degree_bound; ++w) {
                    for (std::uint32_t z = 0; s + u + v + w + z <= degree_bound; ++z) {
                        e = {s, u, v, w, z};
                        const auto n = monomial_weight(d.n_action, vars, e);
                        if (n.gm_weight != 0 || n.cyclic_residue != 0) continue;
                        out.push_back({{s, u, v, w, z}, monomial_weight(d.lambda_action, vars, e).gm_weight});
                    }
                }
            }
        }
    }
    return out;
}

WeightIdentityReport verify_weight_identity(const EHMDatum& d, unsigned degree_bound) {
    WeightIdentityReport r;
    const Integer p(d.p), q(d.q), k(d.k);
    for (const auto& mono : enumerate_invariant_monomials(d, degree_bound)) {
        const auto [s, u, v, w, z] = mono.exponents;
        const Integer direct = s * p + u * q - v * q - w * p;
        const Integer reduced = Integer(u) * (q - p) + Integer(w) * (q - p) + k * z;
        ++r.checked;
        if (direct != mono.lambda_weight || direct != reduced || direct < 0) {
            r.holds = false;
            r.offending = mono;
            return r;
        }
    }
    return r;
}

SpecialPointReport verify_special_point(const EHMDatum& d, unsigned degree_bound) {
    SpecialPointReport r;
    const std::map<std::string, Rational> point{{"x1", 1}, {"x2", 0}, {"x3", 1}, {"x4", 0}, {"y", 0}};
    r.hypersurface_at_point = evaluate(d.hypersurface, point);

    Exponents fe{static_cast<std::uint32_t>(d.a * d.q), 0, static_cast<std::uint32_t>(d.a * d.p), 0, 0};
    r.f = Polynomial::monomial(ehm_variables(), fe);
    r.f_invariant = is_invariant(d.n_action, r.f);
    r.f_at_point = evaluate(r.f, point);

    r.fixed_locus_in_y_zero = true;
    for (const auto& mono : enumerate_invariant_monomials(d, degree_bound)) {
        if (mono.lambda_weight != 0) continue;
        ++r.tau_zero_monomials;
        if (mono.exponents[4] != 0) r.fixed_locus_in_y_zero = false;
    }
    return r;
}

Substitution sl2_substitution() {
    const auto v = [](const char* name) { return Polynomial::variable(name); };
    return {
        {"x1", v("alpha") * v("x1") + v("beta") * v("x2")},
        {"x2", v("gamma") * v("x1") + v("delta") * v("x2")},
        {"x3", v("alpha") * v("x3") + v("beta") * v("x4")},
        {"x4", v("gamma") * v("x3") + v("delta") * v("x4")},
    };
}

ActionsReport verify_actions_on_Db(const EHMDatum& d) {
    ActionsReport r;
    const auto v = [](const char* name) { return Polynomial::variable(name); };
    const Polynomial det_minus_one = v("alpha") * v("delta") - v("beta") * v("gamma") - Polynomial(1LL);
    r.sl2 = preserves_hypersurface(d.hypersurface, sl2_substitution(), det_minus_one);
    r.lambda_invariant = is_invariant(d.lambda_action, d.hypersurface);
    r.n_weight = semi_invariant_weight(d.n_action, d.hypersurface);

    const auto& vars = ehm_variables();
    r.y_power_weight = monomial_weight(d.n_action, vars, {0, 0, 0, 0, static_cast<std::uint32_t>(d.b)}).gm_weight;
    r.x1x4_weight = monomial_weight(d.n_action, vars, {1, 0, 0, 1, 0}).gm_weight;
    r.x2x3_weight = monomial_weight(d.n_action, vars, {0, 1, 1, 0, 0}).gm_weight;
    return r;
}

}  // namespace horoflex
