#include "horoflex/semigroup/variety.hpp"

#include <functional>
#include <set>

namespace horoflex {

bool semigroup_member(std::span<const LatticeVector> gens, const LatticeVector& t) {
    const Eigen::Index n = t.size();
    const Cone sigma = Cone::from_generators(gens, n);
    if (!sigma.is_pointed()) {
        throw NonPointedCone("semigroup_member: cone of generators is not pointed, bounded search undecidable");
    }
    if (!sigma.contains(t)) return false;
    if (is_zero(t)) return true;

    LatticeVector level = LatticeVector::Zero(n);
    for (const auto& f : sigma.facet_normals()) level += f;

    std::vector<LatticeVector> steps;
    for (const auto& g : gens) {
        if (!is_zero(g)) steps.push_back(g);
    }
    sort_unique(steps);
    std::sort(steps.begin(), steps.end(),
              [&](const LatticeVector& a, const LatticeVector& b) { return dot(level, a) > dot(level, b); });

    std::set<LatticeVector, LexLess> dead;
    std::function<bool(const LatticeVector&)> search = [&](const LatticeVector& rest) -> bool {
        if (is_zero(rest)) return true;
        if (dead.count(rest)) return false;
        for (const auto& g : steps) {
            LatticeVector next = rest - g;
            if (sigma.contains(next) && search(next)) return true;
        }
        dead.insert(rest);
        return false;
    };
    return search(t);
}

bool units_exist(const HorosphericalDatum& d) {
    return !d.cone().is_pointed();
}

SaturationResult is_saturated(const HorosphericalDatum& d) {
    if (units_exist(d)) throw NonPointedCone("is_saturated: weight cone is not pointed");
    const auto lattice = group_generated(d.generators());
    for (const auto& h : hilbert_basis(d.cone(), lattice)) {
        if (!semigroup_member(d.generators(), h)) return {false, h};
    }
    return {};
}

HorosphericalDatum saturate(const HorosphericalDatum& d) {
    if (units_exist(d)) throw NonPointedCone("saturate: weight cone is not pointed");
    std::vector<LatticeVector> basis = hilbert_basis(d.cone(), group_generated(d.generators()));
    if (basis.empty()) basis.push_back(LatticeVector::Zero(d.ambient_rank()));
    return HorosphericalDatum(d.torus_rank(), d.dominant_rank(), std::move(basis));
}

namespace {

bool on_face(const Cone& sigma, const FaceDescriptor& face, const LatticeVector& g) {
    return std::all_of(face.zero_normals.begin(), face.zero_normals.end(),
                       [&](std::size_t j) { return dot(sigma.facet_normals()[j], g) == 0; });
}

}  // namespace

std::vector<OrbitFace> orbit_faces(const HorosphericalDatum& d) {
    std::vector<OrbitFace> out;
    for (auto& face : face_lattice(d.cone())) {
        OrbitFace o{std::move(face), {}};
        for (std::size_t i = 0; i < d.generators().size(); ++i) {
            if (!on_face(d.cone(), o.face, d.generators()[i])) o.off_face_generators.push_back(i);
        }
        out.push_back(std::move(o));
    }
    return out;
}

GradingWitness grading_for_face(const HorosphericalDatum& d, const FaceDescriptor& face) {
    const Cone& sigma = d.cone();
    if (!sigma.is_pointed()) throw NonPointedCone("grading_for_face: weight cone is not pointed");
    if (!is_face(sigma, face)) throw std::invalid_argument("grading_for_face: descriptor is not a face of the weight cone");

    // Sum of the generators of the dual face τ* = σ∨ ∩ τ⊥, a relative interior point.
    LatticeVector l = LatticeVector::Zero(d.ambient_rank());
    for (std::size_t j : face.zero_normals) l += sigma.facet_normals()[j];
    l = make_primitive(std::move(l));

    GradingWitness w{face, l, {}};
    for (const auto& g : d.generators()) w.generator_weights.push_back(dot(l, g));
    return w;
}

std::optional<std::string> check_witness(const HorosphericalDatum& d, const GradingWitness& w) {
    const Cone& sigma = d.cone();
    if (!is_face(sigma, w.face)) return "descriptor is not a face of the weight cone";
    if (w.functional.size() != d.ambient_rank()) return "functional has the wrong rank";
    if (w.generator_weights.size() != d.generators().size()) return "generator weight count mismatch";
    for (std::size_t i = 0; i < d.generators().size(); ++i) {
        const LatticeVector& g = d.generators()[i];
        const Integer value = dot(w.functional, g);
        const std::string where = "generator " + std::to_string(i) + " " + to_string(g);
        if (value != w.generator_weights[i]) return where + ": recorded degree differs from l(g)";
        if (value < 0) return where + ": negative degree";
        if (on_face(sigma, w.face, g)) {
            if (value != 0) return where + ": on the face but l(g) != 0";
        } else if (value < 1) {
            return where + ": off the face but l(g) < 1";
        }
    }
    return std::nullopt;
}

std::string_view to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::certified_flexible: return "CertifiedFlexible";
        case VerdictStatus::not_normal: return "NotCovered_NotNormal";
        case VerdictStatus::units_exist: return "NotCovered_UnitsExist";
    }
    return "unknown";
}

FlexibilityVerdict flexibility_verdict(const HorosphericalDatum& d) {
    FlexibilityVerdict v;
    if (units_exist(d)) {
        v.status = VerdictStatus::units_exist;
        return v;
    }
    if (auto sat = is_saturated(d); !sat.saturated) {
        v.status = VerdictStatus::not_normal;
        v.saturation_gap = std::move(sat.gap);
        return v;
    }
    for (const auto& face : face_lattice(d.cone())) v.witnesses.push_back(grading_for_face(d, face));
    return v;
}

}  // namespace horoflex
