#ifndef HOROFLEX_SEMIGROUP_DATUM_HPP
#define HOROFLEX_SEMIGROUP_DATUM_HPP

#include "horoflex/lattice/rational_cone.hpp"

#include <stdexcept>
#include <vector>

namespace horoflex {

class InvalidDatum : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Weight semigroup P of an affine complexity-zero horospherical variety.
///
/// Coordinates are split as (torus characters | fundamental-weight
/// coefficients); the last `dominant_rank` coordinates of every generator
/// must be nonnegative. Duplicate generators are dropped, keeping the first
/// occurrence, so generator indices follow the input order.
class HorosphericalDatum {
public:
    HorosphericalDatum(int torus_rank, int dominant_rank, std::vector<LatticeVector> generators);

    int torus_rank() const { return torus_rank_; }
    int dominant_rank() const { return dominant_rank_; }
    Eigen::Index ambient_rank() const { return torus_rank_ + dominant_rank_; }
    const std::vector<LatticeVector>& generators() const { return generators_; }

    /// The weight cone σ spanned by P.
    const Cone& cone() const { return cone_; }

private:
    int torus_rank_;
    int dominant_rank_;
    std::vector<LatticeVector> generators_;
    Cone cone_;
};

}  // namespace horoflex

#endif  // HOROFLEX_SEMIGROUP_DATUM_HPP
