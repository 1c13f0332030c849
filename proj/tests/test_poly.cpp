#include "random_data.hpp"

#include "horoflex/poly/derivation.hpp"
#include "horoflex/poly/parse.hpp"
#include "horoflex/poly/substitution.hpp"

#include <gtest/gtest.h>

using namespace horoflex;

namespace {

Polynomial P(std::string_view text) {
    return parse_polynomial(text);
}

const std::vector<std::string> kVars{"a", "b", "c", "d", "e"};

}  // namespace

TEST(Polynomial, Arithmetic) {
    EXPECT_EQ(P("(x+y)*(x+y)"), P("x^2 + 2*x*y + y^2"));
    EXPECT_EQ(P("(x-1)*(x+1)"), P("x^2 - 1"));
    EXPECT_EQ(P("x*y") + Polynomial(), P("x*y"));
    EXPECT_TRUE((P("x - y") - P("x") + P("y")).is_zero());
    EXPECT_EQ(P("x + 1").pow(3), P("x^3 + 3*x^2 + 3*x + 1"));
    EXPECT_EQ(P("x").pow(0), Polynomial(1LL));
}

TEST(Polynomial, EqualityIgnoresVariableOrder) {
    const Polynomial a = P("x*y + z");
    const Polynomial b = P("z + y*x");
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.with_variables({"z", "y", "x", "w"}), b);
    EXPECT_THROW(a.with_variables({"x", "y"}), std::invalid_argument);
}

TEST(Polynomial, Accessors) {
    const Polynomial p = P("3/2*x^2*y - x + 1");
    EXPECT_EQ(p.to_string(), "3/2*x^2*y - x + 1");
    EXPECT_EQ(p.total_degree(), 3U);
    EXPECT_EQ(p.degree_in("x"), 2U);
    EXPECT_EQ(p.degree_in("q"), 0U);
    EXPECT_EQ(p.constant_term(), 1);
    EXPECT_FALSE(p.is_constant());
    EXPECT_TRUE(P("7/3").is_constant());
    EXPECT_EQ(P("0").to_string(), "0");
    EXPECT_THROW(Polynomial().leading_term(), std::domain_error);
}

TEST(Polynomial, DivideExact) {
    EXPECT_EQ(divide_exact(P("x^2 - 1"), P("x - 1")), P("x + 1"));
    EXPECT_FALSE(divide_exact(P("x^2 + 1"), P("x - 1")).has_value());
    EXPECT_EQ(divide_exact(P("x^2*y - y^3"), P("x + y")), P("x*y - y^2"));
    EXPECT_FALSE(divide_exact(P("x*y + 1"), P("x")).has_value());
    EXPECT_THROW(divide_exact(P("x"), Polynomial()), std::domain_error);
}

TEST(Polynomial, PartialDerivative) {
    EXPECT_EQ(partial_derivative(P("x^2*y"), "x"), P("2*x*y"));
    EXPECT_TRUE(partial_derivative(P("x^2*y"), "z").is_zero());
}

TEST(PolynomialProperty, RingAxioms) {
    std::mt19937_64 rng(gen::kSeed + 20);
    for (int trial = 0; trial < 150; ++trial) {
        const auto vars = std::vector<std::string>(kVars.begin(), kVars.begin() + gen::uniform(rng, 1, 5));
        const auto p = gen::polynomial(rng, vars, 4), q = gen::polynomial(rng, vars, 4), r = gen::polynomial(rng, vars, 4);
        EXPECT_EQ((p + q) + r, p + (q + r));
        EXPECT_EQ((p * q) * r, p * (q * r));
        EXPECT_EQ(p * (q + r), p * q + p * r);
        EXPECT_EQ(p + q, q + p);
        EXPECT_EQ(p * q, q * p);
        EXPECT_TRUE((p - p).is_zero());
    }
}

TEST(PolynomialProperty, DivideExactIsSound) {
    std::mt19937_64 rng(gen::kSeed + 21);
    for (int trial = 0; trial < 150; ++trial) {
        const auto p = gen::polynomial(rng, kVars, 3), d = gen::polynomial(rng, kVars, 2);
        if (d.is_zero()) continue;
        const auto q = divide_exact(p * d, d);
        ASSERT_TRUE(q.has_value());
        EXPECT_EQ(*q, p);
        if (const auto r = divide_exact(p + Polynomial(1LL), d)) EXPECT_EQ(*r * d, p + Polynomial(1LL));
    }
}

TEST(Parse, Grammar) {
    EXPECT_EQ(P("-x^2 + 3*y"), Polynomial(-1LL) * P("x").pow(2) + Polynomial(3LL) * P("y"));
    EXPECT_EQ(P("2*(x_1 + y2)^2"), P("2*x_1^2 + 4*x_1*y2 + 2*y2^2"));
    EXPECT_EQ(P("  1/2 * t "), Polynomial(Rational(1, 2)) * P("t"));
    EXPECT_EQ(P("(x)^0"), Polynomial(1LL));
    EXPECT_EQ(P("6/4"), Polynomial(Rational(3, 2)));
}

TEST(Parse, ErrorsCarryPositions) {
    const auto position = [](std::string_view s) {
        try {
            parse_polynomial(s);
        } catch (const PolynomialParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1L;
    };
    EXPECT_EQ(position("x +"), 3);
    EXPECT_EQ(position("x $ y"), 2);
    EXPECT_EQ(position("(x + 1"), 6);
    EXPECT_GE(position("1/0"), 0);
    EXPECT_GE(position("x^-1"), 0);
    EXPECT_EQ(position(""), 0);
}

TEST(Parse, RoundTripsThroughToString) {
    std::mt19937_64 rng(gen::kSeed + 22);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = gen::polynomial(rng, kVars, 4);
        EXPECT_EQ(parse_polynomial(p.to_string()), p) << p.to_string();
    }
}

TEST(Substitution, Examples) {
    EXPECT_EQ(substitute(P("x^2"), {{"x", P("x + t")}}), P("x^2 + 2*t*x + t^2"));
    EXPECT_EQ(substitute(P("x^2*y"), {}), P("x^2*y"));
    const Substitution sl2{{"x1", P("alpha*x1 + beta*x2")},
                           {"x2", P("gamma*x1 + delta*x2")},
                           {"x3", P("alpha*x3 + beta*x4")},
                           {"x4", P("gamma*x3 + delta*x4")}};
    const Polynomial image = substitute(P("x1*x4 - x2*x3"), sl2);
    EXPECT_EQ(divide_exact(image, P("x1*x4 - x2*x3")), P("alpha*delta - beta*gamma"));
    EXPECT_EQ(substitute(P("y"), {{"y", P("t_inv*y")}}), P("t_inv*y"));
}

TEST(Substitution, ComposeMatchesSequentialSubstitution) {
    std::mt19937_64 rng(gen::kSeed + 23);
    const std::vector<std::string> vars{"a", "b", "c"};
    for (int trial = 0; trial < 50; ++trial) {
        Substitution f, g;
        for (const auto& v : vars) {
            f[v] = gen::polynomial(rng, vars, 2, 2);
            g[v] = gen::polynomial(rng, vars, 2, 2);
        }
        const auto p = gen::polynomial(rng, vars, 3);
        // compose(f, g) sends v to f(v) with g substituted: a point map x -> f(g(x)).
        EXPECT_EQ(substitute(p, compose(f, g)), substitute(substitute(p, f), g));
    }
}

TEST(Substitution, Evaluate) {
    EXPECT_EQ(evaluate(P("x^2*y - 1/2"), {{"x", Rational(2)}, {"y", Rational(1, 3)}}), Rational(5, 6));
    EXPECT_THROW(evaluate(P("x*y"), {{"x", Rational(1)}}), std::invalid_argument);
}

TEST(Substitution, CancelInversePairs) {
    const std::vector<std::pair<std::string, std::string>> pairs{{"t", "t_inv"}};
    EXPECT_EQ(cancel_inverse_pairs(P("t^3*t_inv^2*x + t_inv*t"), pairs), P("t*x + 1"));
}

TEST(Hypersurface, DanielewskiAtUnitTorus) {
    const Polynomial F = P("x*y^2 - z^2 + 1");
    const Substitution action{{"x", P("x + 2*z*s + s^2*y^2")}, {"y", P("y")}, {"z", P("z + s*y^2")}};
    const auto cert = preserves_hypersurface(F, action);
    EXPECT_TRUE(cert.preserved);
    EXPECT_EQ(cert.multiplier, Polynomial(1LL));
    EXPECT_EQ(cert.image, F);
}

TEST(Hypersurface, QuadricUnderSL2) {
    const Polynomial F = P("y - x1*x4 + x2*x3");
    const Substitution sl2{{"x1", P("alpha*x1 + beta*x2")},
                           {"x2", P("gamma*x1 + delta*x2")},
                           {"x3", P("alpha*x3 + beta*x4")},
                           {"x4", P("gamma*x3 + delta*x4")}};
    const auto cert = preserves_hypersurface(F, sl2, P("alpha*delta - beta*gamma - 1"));
    EXPECT_TRUE(cert.preserved);
    EXPECT_EQ(cert.quotient, P("-x1*x4 + x2*x3"));
    EXPECT_EQ(cert.image - cert.multiplier * F, cert.quotient * P("alpha*delta - beta*gamma - 1"));
    EXPECT_FALSE(preserves_hypersurface(F, sl2).preserved);
}

TEST(Hypersurface, TranslationDoesNotPreserveCoordinateHyperplane) {
    EXPECT_FALSE(preserves_hypersurface(P("x"), {{"x", P("x + t")}}).preserved);
    // Scaling preserves it with a nonconstant multiplier.
    const auto cert = preserves_hypersurface(P("x"), {{"x", P("t*x")}});
    EXPECT_TRUE(cert.preserved);
    EXPECT_EQ(cert.multiplier, P("t"));
}

TEST(Derivation, Apply) {
    EXPECT_EQ(derivation_apply(Derivation({{"x", P("1")}}), P("x^2*y")), P("2*x*y"));
    EXPECT_TRUE(derivation_apply(Derivation({{"x", P("y")}}), P("5")).is_zero());
    EXPECT_EQ(derivation_apply(Derivation({{"x", P("y")}, {"y", P("0")}}), P("x^2")), P("2*x*y"));
}

// The minimal index is reported: D^2 already kills x and y here.
TEST(Derivation, NilpotencyIndex) {
    const Derivation d1({{"x", P("y")}, {"y", P("0")}});
    EXPECT_EQ(is_locally_nilpotent_bounded(d1, 8), 2U);
    const Derivation d2({{"x", P("y^2")}, {"y", P("0")}});
    EXPECT_EQ(is_locally_nilpotent_bounded(d2, 8), 2U);
    for (const auto& D : {d1, d2}) {
        for (const char* v : {"x", "y"}) {
            Polynomial p = P(v);
            for (int k = 0; k < 3; ++k) p = derivation_apply(D, p);
            EXPECT_TRUE(p.is_zero());
        }
    }
    EXPECT_FALSE(is_locally_nilpotent_bounded(Derivation({{"x", P("x")}}), 50).has_value());
    EXPECT_EQ(is_locally_nilpotent_bounded(Derivation({{"x", P("1")}}), 2), 2U);
    EXPECT_FALSE(is_locally_nilpotent_bounded(Derivation({{"x", P("1")}}), 1).has_value());
}

TEST(Derivation, Exponential) {
    const auto e1 = exp_lnd(Derivation({{"x", P("1")}}), "t");
    EXPECT_EQ(e1.at("x"), P("x + t"));
    const auto e2 = exp_lnd(Derivation({{"x", P("y")}, {"y", P("0")}}), "t");
    EXPECT_EQ(e2.at("x"), P("x + t*y"));
    EXPECT_EQ(e2.at("y"), P("y"));
    const auto e3 = exp_lnd(Derivation({{"x", P("y^2")}, {"y", P("0")}}), "t");
    EXPECT_EQ(e3.at("x"), P("x + t*y^2"));
    const auto e4 = exp_lnd(Derivation({{"x", P("y")}, {"y", P("z")}, {"z", P("1")}}), "t");
    EXPECT_EQ(e4.at("x"), P("x + t*y + 1/2*t^2*z + 1/6*t^3"));
    EXPECT_THROW(exp_lnd(Derivation({{"x", P("x")}}), "t"), std::invalid_argument);
    EXPECT_THROW(exp_lnd(Derivation({{"x", P("t")}}), "t"), std::invalid_argument);
}

TEST(DerivationProperty, Leibniz) {
    std::mt19937_64 rng(gen::kSeed + 24);
    const std::vector<std::string> vars{"a", "b", "c"};
    for (int trial = 0; trial < 100; ++trial) {
        std::map<std::string, Polynomial> images;
        for (const auto& v : vars) images[v] = gen::polynomial(rng, vars, 2, 3);
        const Derivation D(images);
        const auto p = gen::polynomial(rng, vars, 3), q = gen::polynomial(rng, vars, 3);
        EXPECT_EQ(derivation_apply(D, p * q), p * derivation_apply(D, q) + q * derivation_apply(D, p));
        EXPECT_EQ(derivation_apply(D, p + q), derivation_apply(D, p) + derivation_apply(D, q));
    }
}

TEST(DerivationProperty, ExpGroupLaw) {
    std::mt19937_64 rng(gen::kSeed + 25);
    for (int trial = 0; trial < 30; ++trial) {
        const Derivation D = gen::triangular_derivation(rng);
        ASSERT_TRUE(is_locally_nilpotent_bounded(D, 64).has_value());
        const auto et = exp_lnd(D, "t"), es = exp_lnd(D, "s"), ets = exp_lnd(D, "u");
        const auto composed = compose(et, es);
        for (const auto& [v, image] : ets) {
            EXPECT_EQ(composed.at(v), substitute(image, {{"u", P("t + s")}}));
        }
        // exp at zero is the identity.
        for (const auto& [v, image] : et) EXPECT_EQ(substitute(image, {{"t", Polynomial()}}), P(v));
    }
}
