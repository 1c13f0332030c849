#ifndef HOROFLEX_SEMIGROUP_VARIETY_HPP
#define HOROFLEX_SEMIGROUP_VARIETY_HPP

#include "horoflex/lattice/hilbert_basis.hpp"
#include "horoflex/semigroup/datum.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace horoflex {

/// Whether t is a nonnegative integer combination of gens. The search is
/// bounded by a functional that is positive on the pointed cone of gens.
bool semigroup_member(std::span<const LatticeVector> gens, const LatticeVector& t);

struct SaturationResult {
    bool saturated = true;
    /// An element of ZP ∩ σ outside P, when not saturated.
    std::optional<LatticeVector> gap;
};

/// ZP ∩ σ = P, tested on the Hilbert basis of ZP ∩ σ.
/// Throws NonPointedCone when σ contains a line (test units_exist first).
SaturationResult is_saturated(const HorosphericalDatum& d);

/// The datum generated by the Hilbert basis of ZP ∩ σ.
HorosphericalDatum saturate(const HorosphericalDatum& d);

/// Nonconstant invertible functions exist iff P ∩ (−P) ≠ {0}, which for a
/// finitely generated P happens exactly when σ is not pointed: the generators
/// lying in the lineality space of σ span it as a cone, so some positive
/// multiple of each of them has its negative in P.
bool units_exist(const HorosphericalDatum& d);

/// A G-orbit, given by its face τ of σ and the generators outside τ (the
/// weights supporting the ideal of the orbit closure).
struct OrbitFace {
    FaceDescriptor face;
    std::vector<std::size_t> off_face_generators;
};

std::vector<OrbitFace> orbit_faces(const HorosphericalDatum& d);

/// Integer functional l with l = 0 on τ and l >= 1 on every generator off τ.
/// It induces the nonnegative grading K[X]_i = ⊕_{l(p) = i} S_p whose
/// positive part is the ideal of the orbit closure.
struct GradingWitness {
    FaceDescriptor face;
    LatticeVector functional;
    std::vector<Integer> generator_weights;
};

GradingWitness grading_for_face(const HorosphericalDatum& d, const FaceDescriptor& face);

/// Describes the first violated witness invariant, or nullopt when sound.
std::optional<std::string> check_witness(const HorosphericalDatum& d, const GradingWitness& w);

enum class VerdictStatus { certified_flexible, not_normal, units_exist };

std::string_view to_string(VerdictStatus s);

struct FlexibilityVerdict {
    VerdictStatus status = VerdictStatus::certified_flexible;
    std::vector<GradingWitness> witnesses;
    std::optional<LatticeVector> saturation_gap;
};

FlexibilityVerdict flexibility_verdict(const HorosphericalDatum& d);

}  // namespace horoflex

#endif  // HOROFLEX_SEMIGROUP_VARIETY_HPP
