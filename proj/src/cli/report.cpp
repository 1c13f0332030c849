#include "horoflex/cli/report.hpp"

#include "horoflex/poly/derivation.hpp"
#include "horoflex/poly/parse.hpp"
#include "horoflex/sl2/ehm.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

namespace horoflex::cli {

using ojson = nlohmann::ordered_json;

namespace {

class Stopwatch {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Report start_report(std::string command) {
    Report r;
    r.command = command;
    r.body["schema"] = kSchemaVersion;
    r.body["tool"] = {{"name", "horoflex"}, {"version", HOROFLEX_VERSION}};
    r.body["command"] = std::move(command);
    return r;
}

void finish(Report& r, const Stopwatch& clock) {
    r.body["exit_code"] = r.exit_code;
    r.body["timing_ms"] = clock.elapsed_ms();
}

ojson vectors_json(const std::vector<LatticeVector>& vs) {
    auto arr = ojson::array();
    for (const auto& v : vs) arr.push_back(vector_json(v));
    return arr;
}

ojson cone_json(const Cone& c) {
    ojson j;
    j["dim"] = c.dim();
    j["pointed"] = c.is_pointed();
    j["rays"] = vectors_json(c.rays());
    j["lineality"] = vectors_json(c.lineality());
    j["facet_normals"] = vectors_json(c.facet_normals());
    j["equations"] = vectors_json(c.equations());
    return j;
}

ojson face_json(const Cone& c, const FaceDescriptor& f, std::size_t index) {
    ojson j;
    j["index"] = index;
    j["dim"] = f.dim;
    std::vector<LatticeVector> rays;
    for (std::size_t r : f.span_rays) rays.push_back(c.rays()[r]);
    j["rays"] = vectors_json(rays);
    j["ray_indices"] = f.span_rays;
    j["zero_normals"] = f.zero_normals;
    return j;
}

std::string face_label(const Cone& c, const FaceDescriptor& f) {
    if (f.span_rays.empty()) return f.dim == 0 ? "{0}" : "lineality";
    std::string s = "cone{";
    for (std::size_t i = 0; i < f.span_rays.size(); ++i) {
        if (i) s += ",";
        s += to_string(c.rays()[f.span_rays[i]]);
    }
    return s + "}";
}

std::size_t face_index(const std::vector<FaceDescriptor>& faces, const FaceDescriptor& f) {
    for (std::size_t i = 0; i < faces.size(); ++i) {
        if (faces[i] == f) return i;
    }
    throw CertificateError("witness face is not in the face lattice");
}

/// trivial: the open orbit (l = 0); elliptic: the minimal face, degree-0 part
/// is the constants; parabolic: everything in between.
std::string grading_kind(const Cone& c, const FaceDescriptor& f) {
    if (f.dim == c.dim()) return "trivial";
    if (f.dim == 0) return "elliptic";
    return "parabolic";
}

std::string join_integers(const std::vector<Integer>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        s += xs[i].str();
    }
    return s;
}

ojson verdict_json(const HorosphericalDatum& d, const FlexibilityVerdict& v) {
    ojson j;
    j["status"] = std::string(to_string(v.status));
    j["saturation_gap"] = v.saturation_gap ? vector_json(*v.saturation_gap) : ojson(nullptr);
    j["witnesses"] = witness_table(d, v.witnesses);
    return j;
}

void verdict_text(std::ostringstream& out, const HorosphericalDatum& d, const FlexibilityVerdict& v) {
    out << "verdict: " << to_string(v.status) << "\n";
    switch (v.status) {
        case VerdictStatus::units_exist:
            out << "  weight cone contains a line: nonconstant invertible functions exist\n";
            break;
        case VerdictStatus::not_normal:
            out << "  saturation gap: " << to_string(*v.saturation_gap) << " lies in ZP ∩ σ but not in P\n";
            break;
        case VerdictStatus::certified_flexible: {
            const auto faces = face_lattice(d.cone());
            out << "  " << v.witnesses.size() << " orbit(s), one grading witness each\n";
            for (const auto& w : v.witnesses) {
                out << "  face " << face_index(faces, w.face) << " " << face_label(d.cone(), w.face)
                    << " dim " << w.face.dim << ": l = " << to_string(w.functional) << ", generator degrees ["
                    << join_integers(w.generator_weights) << "] (" << grading_kind(d.cone(), w.face) << ")\n";
            }
            break;
        }
    }
}

ojson input_json(const DatumSpec& spec) {
    return to_json(spec);
}

int exit_code_for(VerdictStatus s) {
    return s == VerdictStatus::certified_flexible ? kExitOk : kExitNotCovered;
}

}  // namespace

std::string render_json(const Report& r, bool include_timing) {
    if (include_timing) return r.body.dump(2) + "\n";
    ojson copy = r.body;
    copy.erase("timing_ms");
    return copy.dump(2) + "\n";
}

std::string render_text(const Report& r) {
    return r.text;
}

ojson witness_table(const HorosphericalDatum& d, const std::vector<GradingWitness>& witnesses) {
    const auto faces = face_lattice(d.cone());
    auto rows = ojson::array();
    for (const auto& w : witnesses) {
        if (auto problem = check_witness(d, w)) throw CertificateError("corrupted witness: " + *problem);
        ojson row;
        row["face"] = face_json(d.cone(), w.face, face_index(faces, w.face));
        row["functional"] = vector_json(w.functional);
        auto degrees = ojson::array();
        for (const auto& x : w.generator_weights) degrees.push_back(integer_json(x));
        row["generator_degrees"] = std::move(degrees);
        row["grading"] = grading_kind(d.cone(), w.face);
        rows.push_back(std::move(row));
    }
    return rows;
}

Report run_check(const DatumSpec& spec) {
    Stopwatch clock;
    Report r = start_report("check");
    const HorosphericalDatum d = to_datum(spec);
    const FlexibilityVerdict v = flexibility_verdict(d);
    r.body["input"] = input_json(spec);
    r.body["cone"] = cone_json(d.cone());
    r.body["verdict"] = verdict_json(d, v);
    r.exit_code = exit_code_for(v.status);

    std::ostringstream out;
    out << "datum " << spec.label.value_or("(unlabelled)") << ": torus rank " << spec.torus_rank
        << ", dominant rank " << spec.dominant_rank << ", " << d.generators().size() << " generator(s)\n";
    verdict_text(out, d, v);
    r.text = out.str();
    finish(r, clock);
    return r;
}

Report run_saturate(const DatumSpec& spec) {
    Stopwatch clock;
    Report r = start_report("saturate");
    const HorosphericalDatum d = to_datum(spec);
    if (units_exist(d)) throw NonPointedCone("saturate: the weight cone is not pointed (units exist)");
    const SaturationResult before = is_saturated(d);
    const HorosphericalDatum sat = saturate(d);
    const FlexibilityVerdict after = flexibility_verdict(sat);
    const DatumSpec sat_spec = from_datum(sat, spec.label ? std::optional(*spec.label + "-saturated") : std::nullopt);

    r.body["input"] = input_json(spec);
    r.body["was_saturated"] = before.saturated;
    r.body["saturation_gap"] = before.gap ? vector_json(*before.gap) : ojson(nullptr);
    r.body["saturated"] = to_json(sat_spec);
    r.body["verdict_after"] = verdict_json(sat, after);
    r.exit_code = exit_code_for(after.status);

    std::ostringstream out;
    out << (before.saturated ? "already saturated" : "not saturated, gap " + to_string(*before.gap)) << "\n";
    out << "Hilbert basis of ZP ∩ σ:";
    for (const auto& g : sat.generators()) out << " " << to_string(g);
    out << "\n";
    verdict_text(out, sat, after);
    r.text = out.str();
    finish(r, clock);
    return r;
}

Report run_orbits(const DatumSpec& spec) {
    Stopwatch clock;
    Report r = start_report("orbits");
    const HorosphericalDatum d = to_datum(spec);
    const auto orbits = orbit_faces(d);
    r.body["input"] = input_json(spec);
    r.body["cone"] = cone_json(d.cone());
    auto rows = ojson::array();
    std::ostringstream out;
    out << orbits.size() << " orbit(s) <-> faces of σ\n";
    for (std::size_t i = 0; i < orbits.size(); ++i) {
        ojson row;
        row["face"] = face_json(d.cone(), orbits[i].face, i);
        row["off_face_generators"] = orbits[i].off_face_generators;
        rows.push_back(std::move(row));
        out << "  face " << i << " " << face_label(d.cone(), orbits[i].face) << " dim " << orbits[i].face.dim
            << ", ideal of the closure supported on generators {";
        for (std::size_t k = 0; k < orbits[i].off_face_generators.size(); ++k) {
            out << (k ? "," : "") << orbits[i].off_face_generators[k];
        }
        out << "}\n";
    }
    r.body["orbits"] = std::move(rows);
    r.text = out.str();
    finish(r, clock);
    return r;
}

Report run_grading(const DatumSpec& spec, std::size_t index) {
    Stopwatch clock;
    Report r = start_report("grading");
    const HorosphericalDatum d = to_datum(spec);
    const auto faces = face_lattice(d.cone());
    if (index >= faces.size()) {
        throw std::out_of_range("face index " + std::to_string(index) + " out of range; the weight cone has " +
                                std::to_string(faces.size()) + " faces");
    }
    const GradingWitness w = grading_for_face(d, faces[index]);
    r.body["input"] = input_json(spec);
    r.body["witness"] = witness_table(d, {w}).at(0);

    std::ostringstream out;
    out << "face " << index << " " << face_label(d.cone(), w.face) << " dim " << w.face.dim << "\n"
        << "l = " << to_string(w.functional) << "\n"
        << "generator degrees [" << join_integers(w.generator_weights) << "] ("
        << grading_kind(d.cone(), w.face) << ")\n";
    r.text = out.str();
    finish(r, clock);
    return r;
}

Report run_ehm(std::int64_t p, std::int64_t q, std::int64_t m, unsigned bound) {
    Stopwatch clock;
    Report r = start_report("ehm");
    const EHMDatum d = build_ehm(p, q, m);
    const auto monomials = enumerate_invariant_monomials(d, bound);
    const WeightIdentityReport weights = verify_weight_identity(d, bound);
    const SpecialPointReport point = verify_special_point(d, bound);
    const ActionsReport actions = verify_actions_on_Db(d);

    r.body["parameters"] = {{"p", p}, {"q", q}, {"m", m}, {"height", d.height.str()}, {"bound", bound}};
    r.body["derived"] = {{"k", d.k}, {"a", d.a}, {"b", d.b}};
    r.body["hypersurface"] = d.hypersurface.to_string();
    r.body["invariant_monomials"] = monomials.size();
    r.body["weight_identity"] = {
        {"holds", weights.holds},
        {"checked", weights.checked},
        {"offending", weights.offending ? ojson(weights.offending->exponents) : ojson(nullptr)}};
    r.body["special_point"] = {{"point", {1, 0, 1, 0, 0}},
                               {"hypersurface_value", point.hypersurface_at_point.str()},
                               {"f", point.f.to_string()},
                               {"f_invariant", point.f_invariant},
                               {"f_value", point.f_at_point.str()},
                               {"tau_zero_monomials", point.tau_zero_monomials},
                               {"tau_zero_implies_z_zero", point.fixed_locus_in_y_zero}};
    r.body["actions"] = {{"sl2_preserved", actions.sl2.preserved},
                         {"sl2_modulus", "alpha*delta - beta*gamma - 1"},
                         {"sl2_multiplier", actions.sl2.multiplier.to_string()},
                         {"sl2_quotient", actions.sl2.quotient.to_string()},
                         {"lambda_invariant", actions.lambda_invariant},
                         {"n_weight_y_power", integer_json(actions.y_power_weight)},
                         {"n_weight_x1x4", integer_json(actions.x1x4_weight)},
                         {"n_weight_x2x3", integer_json(actions.x2x3_weight)},
                         {"n_semi_invariant", actions.n_weight.has_value()}};
    r.body["citations"] = ojson::array(
        {"three SL2-orbits on E_{h,m} for h < 1 (literature fact, not computed)"});
    const bool ok = weights.holds && point.all_pass() && actions.all_pass();
    r.body["all_checks_pass"] = ok;
    r.exit_code = ok ? kExitOk : kExitError;

    std::ostringstream out;
    out << "E_{" << d.height.str() << "," << m << "}: k=" << d.k << " a=" << d.a << " b=" << d.b << "\n"
        << "D_b: " << d.hypersurface.to_string() << " = 0\n"
        << "invariant monomials of degree <= " << bound << ": " << monomials.size() << "\n"
        << "tau = sp+uq-vq-wp = u(q-p)+w(q-p)+kz >= 0: " << (weights.holds ? "pass" : "FAIL") << " ("
        << weights.checked << " checked)\n"
        << "tau = 0 => z = 0: " << (point.fixed_locus_in_y_zero ? "pass" : "FAIL") << " ("
        << point.tau_zero_monomials << " monomials with tau = 0)\n"
        << "D_b at (1,0,1,0,0): " << point.hypersurface_at_point.str() << "\n"
        << "f = " << point.f.to_string() << ": N-invariant " << (point.f_invariant ? "yes" : "NO")
        << ", f(P) = " << point.f_at_point.str() << "\n"
        << "SL2 preserves D_b modulo alpha*delta - beta*gamma - 1: " << (actions.sl2.preserved ? "pass" : "FAIL")
        << " (quotient " << actions.sl2.quotient.to_string() << ")\n"
        << "Lambda-invariant equation: " << (actions.lambda_invariant ? "pass" : "FAIL") << "\n"
        << "N-weights y^b / x1x4 / x2x3: " << actions.y_power_weight << " / " << actions.x1x4_weight << " / "
        << actions.x2x3_weight << "\n"
        << (ok ? "all checks pass" : "SOME CHECKS FAILED") << "\n";
    r.text = out.str();
    finish(r, clock);
    return r;
}

namespace {

Polynomial var(const char* name) {
    return Polynomial::variable(name);
}

/// (t, s)·(x, y, z) = (t²(x + 2zs + s²y²), t⁻¹y, z + sy²), with t⁻¹ as a variable.
Substitution danielewski_action(const Polynomial& t, const Polynomial& t_inv, const Polynomial& s) {
    const Polynomial x = var("x"), y = var("y"), z = var("z");
    return {{"x", t.pow(2) * (x + Polynomial(2LL) * z * s + s.pow(2) * y.pow(2))},
            {"y", t_inv * y},
            {"z", z + s * y.pow(2)}};
}

}  // namespace

Report run_danielewski() {
    Stopwatch clock;
    Report r = start_report("examples run danielewski");
    const Polynomial x = var("x"), y = var("y"), z = var("z");
    const Polynomial F = x * y.pow(2) - z.pow(2) + Polynomial(1LL);
    const Polynomial t = var("t"), ti = var("t_inv"), s = var("s");

    const Substitution action = danielewski_action(t, ti, s);
    const HypersurfaceCertificate preserved = preserves_hypersurface(F, action, t * ti - Polynomial(1LL));

    // A(t,s) ∘ A(t',s') = A(tt', s' + s t'^-2) as maps of points.
    const Polynomial t2 = var("t2"), ti2 = var("t2_inv"), s2 = var("s2");
    const Substitution lhs = compose(action, danielewski_action(t2, ti2, s2));
    const Substitution rhs = danielewski_action(t * t2, ti * ti2, s2 + s * ti2.pow(2));
    const std::vector<std::pair<std::string, std::string>> inverses{{"t", "t_inv"}, {"t2", "t2_inv"}};
    bool composition = true;
    for (const char* v : {"x", "y", "z"}) {
        if (!(cancel_inverse_pairs(lhs.at(v), inverses) == cancel_inverse_pairs(rhs.at(v), inverses))) {
            composition = false;
        }
    }

    // The G_a-part is exp(sD) for D = 2z ∂/∂x + y² ∂/∂z.
    const Derivation D({{"x", Polynomial(2LL) * z}, {"y", Polynomial()}, {"z", y.pow(2)}});
    const bool kills_equation = derivation_apply(D, F).is_zero();
    const auto index = is_locally_nilpotent_bounded(D, 8);
    const Substitution unit_action = danielewski_action(Polynomial(1LL), Polynomial(1LL), s);
    bool exp_matches = false;
    if (index) {
        const Substitution flow = exp_lnd(D, "s");
        exp_matches = true;
        for (const char* v : {"x", "y", "z"}) {
            if (!(flow.at(v) == unit_action.at(v))) exp_matches = false;
        }
    }

    r.body["hypersurface"] = F.to_string();
    r.body["action"] = {{"x", action.at("x").to_string()},
                        {"y", action.at("y").to_string()},
                        {"z", action.at("z").to_string()},
                        {"relation", "t*t_inv - 1"}};
    r.body["checks"] = {
        {"action_preserves_hypersurface",
         {{"pass", preserved.preserved},
          {"multiplier", preserved.multiplier.to_string()},
          {"quotient", preserved.quotient.to_string()}}},
        {"composition_law",
         {{"pass", composition}, {"law", "(t,s)∘(t',s') = (tt', s' + s·t'^-2)"}, {"provenance", "DERIVED"}}},
        {"lnd_kills_equation", {{"pass", kills_equation}, {"derivation", "x -> 2*z, y -> 0, z -> y^2"}}},
        {"lnd_nilpotency_index", index ? ojson(*index) : ojson(nullptr)},
        {"exp_lnd_matches_additive_action", {{"pass", exp_matches}}}};
    r.body["citations"] = ojson::array({"ML(X) = K[y] (literature fact, not computed)",
                                        "X is smooth and not flexible (literature fact, not computed)"});
    const bool ok = preserved.preserved && composition && kills_equation && index && exp_matches;
    r.body["all_checks_pass"] = ok;
    r.exit_code = ok ? kExitOk : kExitError;

    std::ostringstream out;
    out << "Danielewski surface " << F.to_string() << " = 0\n"
        << "action (t,s): x -> " << action.at("x").to_string() << ", y -> " << action.at("y").to_string()
        << ", z -> " << action.at("z").to_string() << "  [t_inv = t^-1]\n"
        << "preserves the surface modulo t*t_inv - 1: " << (preserved.preserved ? "pass" : "FAIL") << "\n"
        << "composition law (t,s)∘(t',s') = (tt', s' + s t'^-2) [derived]: " << (composition ? "pass" : "FAIL")
        << "\n"
        << "D = 2z d/dx + y^2 d/dz kills the equation: " << (kills_equation ? "pass" : "FAIL")
        << ", nilpotency index " << (index ? std::to_string(*index) : std::string("none")) << "\n"
        << "exp(sD) equals the s-action at t = 1: " << (exp_matches ? "pass" : "FAIL") << "\n"
        << "cited, not computed: ML(X) = K[y], so X is not flexible\n"
        << (ok ? "all checks pass" : "SOME CHECKS FAILED") << "\n";
    r.text = out.str();
    finish(r, clock);
    return r;
}

Report run_lnd(const std::vector<std::string>& assignments, unsigned bound) {
    Stopwatch clock;
    Report r = start_report("lnd");
    std::map<std::string, Polynomial> images;
    for (const auto& a : assignments) {
        const auto eq = a.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw std::invalid_argument("expected var=polynomial, got '" + a + "'");
        }
        const Polynomial v = parse_polynomial(a.substr(0, eq));
        if (v.terms().size() != 1 || v.total_degree() != 1 || v.leading_term().second != 1 ||
            v.variables().size() != 1) {
            throw std::invalid_argument("left side of '" + a + "' is not a variable name");
        }
        if (!images.emplace(v.variables().front(), parse_polynomial(a.substr(eq + 1))).second) {
            throw std::invalid_argument("variable '" + v.variables().front() + "' assigned twice");
        }
    }
    const Derivation D(std::move(images));
    const auto index = is_locally_nilpotent_bounded(D, bound);

    std::string param = "t";
    const auto vars = D.variables();
    while (std::find(vars.begin(), vars.end(), param) != vars.end()) param += "_";

    ojson derivation;
    for (const auto& v : vars) derivation[v] = D.image(v).to_string();
    r.body["derivation"] = std::move(derivation);
    r.body["bound"] = bound;
    r.body["nilpotency_index"] = index ? ojson(*index) : ojson(nullptr);
    r.body["status"] = index ? "locally_nilpotent" : "no_evidence";

    std::ostringstream out;
    for (const auto& v : vars) out << "D(" << v << ") = " << D.image(v).to_string() << "\n";
    if (index) {
        out << "locally nilpotent: D^" << *index << " vanishes on every variable\n";
        ojson flow;
        const Substitution e = exp_lnd(D, param, bound);
        out << "exp(" << param << "*D):\n";
        for (const auto& v : vars) {
            flow[v] = e.at(v).to_string();
            out << "  " << v << " -> " << e.at(v).to_string() << "\n";
        }
        r.body["parameter"] = param;
        r.body["exp"] = std::move(flow);
    } else {
        out << "no evidence of local nilpotency up to D^" << bound << " (not a proof of the contrary)\n";
        r.exit_code = kExitNotCovered;
    }
    r.text = out.str();
    finish(r, clock);
    return r;
}

const std::vector<std::pair<std::string, std::string>>& example_registry() {
    static const std::vector<std::pair<std::string, std::string>> registry{
        {"cusp", "<2,3> in Z: the non-normal curve x^2 = y^3, then its saturation"},
        {"plane", "<(1,0),(0,1)>: the affine plane as a toric variety"},
        {"veronese", "<(1,0),(1,1),(1,2)>: the quadratic Veronese cone"},
        {"danielewski", "x*y^2 = z^2 - 1 with its G_m ⋉ G_a action"},
        {"ehm-1-2-1", "E_{h,m} with (p,q,m) = (1,2,1)"},
        {"ehm-2-3-4", "E_{h,m} with (p,q,m) = (2,3,4)"},
    };
    return registry;
}

namespace {

DatumSpec toric_spec(std::string label, int rank, std::vector<std::vector<std::int64_t>> gens) {
    return DatumSpec{rank, 0, std::move(gens), std::move(label)};
}

}  // namespace

Report run_example(std::string_view name) {
    if (name == "cusp") {
        Stopwatch clock;
        const DatumSpec spec = toric_spec("cusp", 1, {{2}, {3}});
        Report check = run_check(spec);
        Report sat = run_saturate(spec);
        Report r = start_report("examples run cusp");
        r.body["input"] = to_json(spec);
        r.body["verdict"] = check.body["verdict"];
        r.body["saturated"] = sat.body["saturated"];
        r.body["verdict_after_saturation"] = sat.body["verdict_after"];
        r.body["citations"] = ojson::array({"x^2 = y^3 is not normal and not flexible"});
        r.exit_code = check.exit_code;
        r.text = check.text + "after saturation:\n" + sat.text;
        finish(r, clock);
        return r;
    }
    if (name == "plane") {
        Report r = run_check(toric_spec("plane", 2, {{1, 0}, {0, 1}}));
        r.body["command"] = r.command = "examples run plane";
        return r;
    }
    if (name == "veronese") {
        Report r = run_check(toric_spec("veronese", 2, {{1, 0}, {1, 1}, {1, 2}}));
        r.body["command"] = r.command = "examples run veronese";
        return r;
    }
    if (name == "danielewski") return run_danielewski();
    if (name == "ehm-1-2-1" || name == "ehm-2-3-4") {
        Report r = name == "ehm-1-2-1" ? run_ehm(1, 2, 1, 10) : run_ehm(2, 3, 4, 10);
        r.body["command"] = r.command = "examples run " + std::string(name);
        return r;
    }
    throw std::invalid_argument("unknown example '" + std::string(name) + "'; see `examples list`");
}

Report run_examples_list() {
    Stopwatch clock;
    Report r = start_report("examples list");
    auto rows = ojson::array();
    std::ostringstream out;
    for (const auto& [name, description] : example_registry()) {
        rows.push_back({{"name", name}, {"description", description}});
        out << name << "  " << description << "\n";
    }
    r.body["examples"] = std::move(rows);
    r.text = out.str();
    finish(r, clock);
    return r;
}

}  // namespace horoflex::cli
