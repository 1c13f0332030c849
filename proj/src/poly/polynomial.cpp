#include "horoflex/poly/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace horoflex {

std::uint64_t total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
}

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
    const auto da = horoflex::total_degree(a), db = horoflex::total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial::Polynomial(long long c) : Polynomial(Rational(c)) {}

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_.emplace(Exponents{}, c);
}

Polynomial::Polynomial(std::vector<std::string> variables, TermMap terms)
    : vars_(std::move(variables)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.size() != vars_.size()) {
            throw std::invalid_argument("Polynomial: exponent tuple length does not match the variable list");
        }
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
    }
}

Polynomial Polynomial::variable(const std::string& name) {
    return monomial({name}, {1});
}

Polynomial Polynomial::monomial(std::vector<std::string> variables, Exponents exponents, Rational coefficient) {
    TermMap t;
    t.emplace(std::move(exponents), std::move(coefficient));
    return Polynomial(std::move(variables), std::move(t));
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && horoflex::total_degree(terms_.begin()->first) == 0);
}

Rational Polynomial::constant_term() const {
    if (terms_.empty()) return 0;
    const auto& [e, c] = *terms_.begin();
    return horoflex::total_degree(e) == 0 ? c : Rational(0);
}

std::uint64_t Polynomial::total_degree() const {
    return terms_.empty() ? 0 : horoflex::total_degree(terms_.rbegin()->first);
}

std::uint32_t Polynomial::degree_in(std::string_view var) const {
    const auto it = std::find(vars_.begin(), vars_.end(), var);
    if (it == vars_.end()) return 0;
    const auto k = static_cast<std::size_t>(it - vars_.begin());
    std::uint32_t deg = 0;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[k]);
    return deg;
}

std::pair<Exponents, Rational> Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading_term of the zero polynomial");
    return *terms_.rbegin();
}

Polynomial Polynomial::with_variables(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<std::size_t> target(vars_.size());
    std::vector<bool> present(vars_.size(), false);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        const auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it != vars.end()) {
            target[i] = static_cast<std::size_t>(it - vars.begin());
            present[i] = true;
        }
    }
    TermMap out;
    for (const auto& [e, c] : terms_) {
        Exponents mapped(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!present[i]) {
                throw std::invalid_argument("with_variables: variable '" + vars_[i] + "' occurs but is not listed");
            }
            mapped[target[i]] = e[i];
        }
        out.emplace(std::move(mapped), c);
    }
    return Polynomial(vars, std::move(out));
}

std::vector<std::string> merged_variables(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out = a;
    for (const auto& v : b) {
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.vars_ != vars_) {
        auto vars = merged_variables(vars_, o.vars_);
        *this = with_variables(vars);
        return *this += o.with_variables(vars);
    }
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

Polynomial operator-(Polynomial a) {
    for (auto& [e, c] : a.terms_) c = -c;
    return a;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    return *this += -o;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_) {
        auto vars = merged_variables(a.vars_, b.vars_);
        return a.with_variables(vars) * b.with_variables(vars);
    }
    Polynomial out;
    out.vars_ = a.vars_;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            const Rational c = ca * cb;
            auto [it, inserted] = out.terms_.emplace(std::move(e), c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1LL), base = *this;
    while (e) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
    const auto vars = merged_variables(a.vars_, b.vars_);
    return a.with_variables(vars).terms_ == b.with_variables(vars).terms_;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += mag.str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
    }
    return out;
}

Polynomial partial_derivative(const Polynomial& p, std::string_view var) {
    const auto& vars = p.variables();
    const auto it = std::find(vars.begin(), vars.end(), var);
    if (it == vars.end()) return Polynomial();
    const auto k = static_cast<std::size_t>(it - vars.begin());
    Polynomial::TermMap out;
    for (const auto& [e, c] : p.terms()) {
        if (e[k] == 0) continue;
        Exponents d = e;
        --d[k];
        out.emplace(std::move(d), c * e[k]);
    }
    return Polynomial(vars, std::move(out));
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw std::domain_error("divide_exact: division by the zero polynomial");
    const auto vars = merged_variables(p.variables(), d.variables());
    Polynomial rest = p.with_variables(vars);
    const Polynomial divisor = d.with_variables(vars);
    const auto [lead_e, lead_c] = divisor.leading_term();

    Polynomial::TermMap quotient;
    while (!rest.is_zero()) {
        const auto [e, c] = rest.leading_term();
        Exponents shift(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            // a leading term the divisor cannot reach stays in the remainder
            if (e[i] < lead_e[i]) return std::nullopt;
            shift[i] = e[i] - lead_e[i];
        }
        const Rational factor = c / lead_c;
        quotient.emplace(shift, factor);
        rest -= Polynomial::monomial(vars, shift, factor) * divisor;
    }
    return Polynomial(vars, std::move(quotient));
}

}  // namespace horoflex
