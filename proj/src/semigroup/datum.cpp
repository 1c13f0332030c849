#include "horoflex/semigroup/datum.hpp"

#include <string>

namespace horoflex {

namespace {

std::vector<LatticeVector> validated(int torus_rank, int dominant_rank, std::vector<LatticeVector> gens) {
    if (torus_rank < 0 || dominant_rank < 0) throw InvalidDatum("ranks must be nonnegative");
    const int n = torus_rank + dominant_rank;
    if (n == 0) throw InvalidDatum("ambient rank must be positive");
    if (gens.empty()) throw InvalidDatum("generator list is empty");
    std::vector<LatticeVector> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const LatticeVector& g = gens[i];
        if (g.size() != n) {
            throw InvalidDatum("generator " + std::to_string(i) + " has " + std::to_string(g.size()) +
                               " coordinates, expected torus_rank + dominant_rank = " + std::to_string(n));
        }
        for (int k = torus_rank; k < n; ++k) {
            if (g(k) < 0) {
                throw InvalidDatum("generator " + std::to_string(i) + " " + to_string(g) +
                                   " violates dominance: coordinate " + std::to_string(k) + " is negative");
            }
        }
        const bool duplicate =
            std::any_of(out.begin(), out.end(), [&](const LatticeVector& h) { return equal(g, h); });
        if (!duplicate) out.push_back(g);
    }
    return out;
}

}  // namespace

HorosphericalDatum::HorosphericalDatum(int torus_rank, int dominant_rank, std::vector<LatticeVector> generators)
    : torus_rank_(torus_rank),
      dominant_rank_(dominant_rank),
      generators_(validated(torus_rank, dominant_rank, std::move(generators))),
      cone_(Cone::from_generators(generators_, torus_rank + dominant_rank)) {}

}  // namespace horoflex
