// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include "oracles.hpp"
#include "random_data.hpp"

#include "horoflex/cli/report.hpp"
#include "horoflex/lattice/hilbert_basis.hpp"
#include "horoflex/poly/derivation.hpp"
#include "horoflex/sl2/ehm.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace horoflex;
using oracle::Vec;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

void fail(Outcome& o, const std::string& why) {
    if (o.pass) o.detail = why;
    o.pass = false;
}

Outcome cusp() {
    Outcome o;
    const cli::DatumSpec spec{1, 0, {{2}, {3}}, "cusp"};
    const auto check = cli::run_check(spec);
    if (check.body["verdict"]["status"] != "NotCovered_NotNormal") fail(o, "check status");
    if (check.body["verdict"]["saturation_gap"] != nlohmann::ordered_json::array({1})) fail(o, "gap is not (1)");
    const auto sat = cli::run_saturate(spec);
    if (sat.body["saturated"]["generators"] != nlohmann::ordered_json::parse("[[1]]")) fail(o, "saturation is not <1>");
    const auto saturated = cli::parse_spec(sat.body["saturated"].dump());
    if (cli::run_check(saturated).body["verdict"]["status"] != "CertifiedFlexible") fail(o, "re-check status");
    o.detail = o.pass ? "gap (1), saturation <1>, re-check CertifiedFlexible" : o.detail;
    return o;
}

Outcome witness_soundness() {
    Outcome o;
    std::mt19937_64 rng(gen::kSeed + 100);
    std::size_t witnesses = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = gen::saturated_datum(rng);
        const auto v = flexibility_verdict(d);
        if (v.status != VerdictStatus::certified_flexible) {
            fail(o, "datum " + std::to_string(trial) + " not certified");
            continue;
        }
        if (v.witnesses.size() != face_lattice(d.cone()).size()) fail(o, "missing faces");
        const auto gens = oracle::to_vecs(d.generators());
        for (const auto& w : v.witnesses) {
            ++witnesses;
            const auto l = oracle::to_vec(w.functional);
            std::vector<Vec> face_rays;
            for (auto r : w.face.span_rays) face_rays.push_back(oracle::to_vec(d.cone().rays()[r]));
            for (std::size_t i = 0; i < gens.size(); ++i) {
                const auto value = oracle::dot(l, gens[i]);
                const bool on = face_rays.empty() ? oracle::is_zero(gens[i]) : oracle::in_cone(face_rays, gens[i]);
                if (value != w.generator_weights[i]) fail(o, "reported degree differs from l(g)");
                if (on && value != 0) fail(o, "l nonzero on a face generator");
                if (!on && value < 1) fail(o, "l < 1 on an off-face generator");
                if (value < 0) fail(o, "negative degree");
            }
        }
    }
    if (o.pass) o.detail = "200 datums, " + std::to_string(witnesses) + " witnesses";
    return o;
}

Outcome saturation_oracle() {
    Outcome o;
    std::mt19937_64 rng(gen::kSeed + 200);
    int unsaturated = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto d = gen::pointed_datum(rng);
        const auto r = is_saturated(d);
        const auto gap = oracle::saturation_gap(oracle::to_vecs(d.generators()), 10);
        if (r.saturated != !gap.has_value()) {
            std::ostringstream why;
            why << "mismatch on";
            for (const auto& g : d.generators()) why << " " << to_string(g);
            fail(o, why.str());
        }
        unsaturated += r.saturated ? 0 : 1;
    }
    if (o.pass) o.detail = "200 datums, " + std::to_string(unsaturated) + " not saturated, 0 mismatches";
    return o;
}

Outcome duality_and_hilbert() {
    Outcome o;
    std::mt19937_64 rng(gen::kSeed + 300);
    for (int trial = 0; trial < 100; ++trial) {
        const auto gens = gen::pointed_cone_generators(rng, 4);
        const auto n = gens.front().size();
        std::vector<LatticeVector> lgens;
        for (const auto& g : gens) lgens.push_back(oracle::to_lattice(g));
        const Cone c = Cone::from_generators(lgens, static_cast<Eigen::Index>(n));
        if (!(dual_cone(dual_cone(c)) == c)) fail(o, "dual(dual(c)) != c");

        const auto hb_l = hilbert_basis(c, LatticeSubgroup<Integer>::full(static_cast<Eigen::Index>(n)));
        const auto hb = oracle::to_vecs(hb_l);
        // Completeness: every lattice point of the cone with coordinate sum <= 12 decomposes.
        oracle::SemigroupMembership member(hb, *oracle::positive_functional(gens, n));
        oracle::for_each_l1_ball(n, 12, [&](const Vec& x) {
            if (oracle::in_cone(gens, x) && !member(x)) fail(o, "incomplete Hilbert basis");
        });
        // Minimality: no element is a combination of the others.
        for (std::size_t i = 0; i < hb.size(); ++i) {
            std::vector<Vec> others = hb;
            others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
            oracle::SemigroupMembership rest(others, *oracle::positive_functional(gens, n));
            if (!others.empty() && rest(hb[i])) fail(o, "non-minimal Hilbert basis");
            if (!oracle::in_cone(gens, hb[i])) fail(o, "Hilbert basis element outside the cone");
        }
    }
    if (o.pass) o.detail = "100 cones";
    return o;
}

Outcome ehm() {
    Outcome o;
    for (auto [p, q, m] : {std::tuple{1, 2, 1}, {1, 3, 2}, {2, 3, 4}, {3, 5, 6}}) {
        const auto d = build_ehm(p, q, m);
        const std::string tag = "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(m) + ")";
        for (const auto& mono : enumerate_invariant_monomials(d, 10)) {
            const auto& [s, u, v, w, z] = mono.exponents;
            const std::int64_t S = s, U = u, V = v, W = w, Z = z;
            const std::int64_t tau = S * p + U * q - V * q - W * p;
            if (tau != U * (q - p) + W * (q - p) + d.k * Z) fail(o, tag + " tau identity");
            if (tau < 0) fail(o, tag + " tau < 0");
            if (tau == 0 && Z != 0) fail(o, tag + " tau = 0 with z != 0");
            if (mono.lambda_weight != tau) fail(o, tag + " reported tau");
        }
        if (!verify_weight_identity(d, 10).holds) fail(o, tag + " verify_weight_identity");
        const auto point = verify_special_point(d, 10);
        if (!point.f_invariant || point.f_at_point != 1 || point.hypersurface_at_point != 0) fail(o, tag + " special point");
        const auto actions = verify_actions_on_Db(d);
        if (!actions.sl2.preserved) fail(o, tag + " SL2 preservation");
        const Polynomial modulus = Polynomial::variable("alpha") * Polynomial::variable("delta") -
                                   Polynomial::variable("beta") * Polynomial::variable("gamma") - Polynomial(1LL);
        if (!(actions.sl2.image - actions.sl2.multiplier * d.hypersurface == actions.sl2.quotient * modulus)) {
            fail(o, tag + " SL2 certificate does not recombine");
        }
    }
    if (o.pass) o.detail = "4 parameter triples, degree bound 10";
    return o;
}

Outcome danielewski() {
    Outcome o;
    const auto r = cli::run_danielewski();
    const auto& checks = r.body["checks"];
    if (checks["action_preserves_hypersurface"]["pass"] != true) fail(o, "action does not preserve x*y^2 - z^2 + 1");
    if (checks["composition_law"]["pass"] != true) fail(o, "composition law");
    if (o.pass) o.detail = "preservation modulo t*t_inv - 1 and composition law";
    return o;
}

Outcome lnd_group_law() {
    Outcome o;
    std::mt19937_64 rng(gen::kSeed + 700);
    unsigned max_index = 0;
    for (int trial = 0; trial < 50; ++trial) {
        const Derivation D = gen::triangular_derivation(rng);
        const auto index = is_locally_nilpotent_bounded(D, 64);
        if (!index) {
            fail(o, "triangular derivation not certified");
            continue;
        }
        max_index = std::max(max_index, *index);
        const auto composed = compose(exp_lnd(D, "t"), exp_lnd(D, "s"));
        for (const auto& [v, image] : exp_lnd(D, "u")) {
            if (!(composed.at(v) == substitute(image, {{"u", Polynomial::variable("t") + Polynomial::variable("s")}}))) {
                fail(o, "exp_t o exp_s != exp_{t+s} on " + v);
            }
        }
    }
    if (o.pass) o.detail = "50 derivations, max nilpotency index " + std::to_string(max_index);
    return o;
}

Outcome determinism() {
    Outcome o;
    for (const auto& [name, description] : cli::example_registry()) {
        const auto first = cli::render_json(cli::run_example(name), false);
        for (int rep = 0; rep < 3; ++rep) {
            if (cli::render_json(cli::run_example(name), false) != first) fail(o, name + " differs between runs");
        }
    }
    if (o.pass) o.detail = std::to_string(cli::example_registry().size()) + " examples, 4 runs each";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"1 cusp counterexample", cusp},
        {"2 witness soundness", witness_soundness},
        {"3 saturation oracle", saturation_oracle},
        {"4 duality and Hilbert basis", duality_and_hilbert},
        {"5 E_{h,m} identities", ehm},
        {"6 Danielewski checks", danielewski},
        {"7 exp_lnd group law", lnd_group_law},
        {"8 determinism", determinism},
    };
    bool all = true;
    for (const auto& [name, run] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << "  " << name << "  (" << o.detail << ", " << static_cast<long>(ms)
                  << " ms)" << std::endl;
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
