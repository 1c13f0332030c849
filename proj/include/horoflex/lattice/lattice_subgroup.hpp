#ifndef HOROFLEX_LATTICE_LATTICE_SUBGROUP_HPP
#define HOROFLEX_LATTICE_LATTICE_SUBGROUP_HPP

#include "horoflex/lattice/integer_matrix.hpp"

#include <span>
#include <vector>

namespace horoflex {

/// Subgroup of Z^n stored by its Hermite basis.
template <class Scalar>
class LatticeSubgroup {
public:
    LatticeSubgroup(Echelon<Scalar> hermite, Eigen::Index ambient_rank)
        : hermite_(std::move(hermite)), ambient_rank_(ambient_rank) {}

    static LatticeSubgroup full(Eigen::Index ambient_rank) {
        std::vector<Vector<Scalar>> rows;
        for (Eigen::Index i = 0; i < ambient_rank; ++i) {
            rows.push_back(Vector<Scalar>::Unit(ambient_rank, i));
        }
        return LatticeSubgroup(hermite_normal_form(std::move(rows), ambient_rank), ambient_rank);
    }

    const std::vector<Vector<Scalar>>& basis() const { return hermite_.rows; }
    Eigen::Index rank() const { return static_cast<Eigen::Index>(hermite_.rows.size()); }
    Eigen::Index ambient_rank() const { return ambient_rank_; }

    bool contains(Vector<Scalar> t) const {
        if (t.size() != ambient_rank_) {
            throw DimensionMismatch("LatticeSubgroup::contains: vector of rank " + std::to_string(t.size()) +
                                    " in ambient rank " + std::to_string(ambient_rank_));
        }
        for (std::size_t i = 0; i < hermite_.rows.size(); ++i) {
            const Eigen::Index c = hermite_.pivots[i];
            const Scalar& pivot = hermite_.rows[i](c);
            if (t(c) % pivot != Scalar(0)) return false;
            t -= (t(c) / pivot) * hermite_.rows[i];
        }
        return is_zero(t);
    }

    /// Index of the subgroup in Z^n when it has full rank, 0 otherwise.
    Scalar index() const {
        if (rank() != ambient_rank_) return Scalar(0);
        Scalar prod(1);
        for (std::size_t i = 0; i < hermite_.rows.size(); ++i) prod *= hermite_.rows[i](hermite_.pivots[i]);
        return prod;
    }

private:
    Echelon<Scalar> hermite_;
    Eigen::Index ambient_rank_;
};

/// The subgroup of all integer combinations of gens.
template <class Scalar>
LatticeSubgroup<Scalar> group_generated(std::span<const Vector<Scalar>> gens) {
    if (gens.empty()) throw std::invalid_argument("group_generated: empty generator list");
    const Eigen::Index n = gens.front().size();
    std::vector<Vector<Scalar>> rows;
    for (const auto& g : gens) {
        if (g.size() != n) {
            throw DimensionMismatch("group_generated: mixed ambient ranks " + std::to_string(n) + " and " +
                                    std::to_string(g.size()));
        }
        rows.push_back(g);
    }
    return LatticeSubgroup<Scalar>(hermite_normal_form(std::move(rows), n), n);
}

template <class Scalar>
LatticeSubgroup<Scalar> group_generated(const std::vector<Vector<Scalar>>& gens) {
    return group_generated(std::span<const Vector<Scalar>>(gens));
}

}  // namespace horoflex

#endif  // HOROFLEX_LATTICE_LATTICE_SUBGROUP_HPP
