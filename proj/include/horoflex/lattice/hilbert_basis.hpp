#ifndef HOROFLEX_LATTICE_HILBERT_BASIS_HPP
#define HOROFLEX_LATTICE_HILBERT_BASIS_HPP

#include "horoflex/lattice/lattice_subgroup.hpp"
#include "horoflex/lattice/rational_cone.hpp"

#include <set>
#include <vector>

namespace horoflex {

/// Basis of L ∩ span(c).
template <class Scalar>
std::vector<Vector<Scalar>> lattice_in_span(const RationalCone<Scalar>& c, const LatticeSubgroup<Scalar>& lattice) {
    const auto& basis = lattice.basis();
    if (c.equations().empty() || basis.empty()) return basis;
    const Eigen::Index n = c.ambient_rank();
    Matrix<Scalar> eq = stack_rows(c.equations(), n);
    Matrix<Scalar> b = stack_rows(basis, n);
    Matrix<Scalar> restricted = eq * b.transpose();
    std::vector<Vector<Scalar>> out;
    for (const auto& y : integer_kernel<Scalar>(restricted)) out.push_back(b.transpose() * y);
    return out;
}

namespace detail {

/// Half-open parallelepiped spanned by linearly independent lattice vectors,
/// with the map sending a point of their span to its representative inside.
template <class Scalar>
class Parallelepiped {
public:
    Parallelepiped(std::vector<Vector<Scalar>> edges, std::vector<Eigen::Index> rows)
        : edges_(std::move(edges)), rows_(std::move(rows)) {
        const auto d = static_cast<Eigen::Index>(edges_.size());
        Matrix<Scalar> square(d, d);
        for (Eigen::Index i = 0; i < d; ++i) {
            for (Eigen::Index j = 0; j < d; ++j) square(i, j) = edges_[j](rows_[i]);
        }
        det_ = determinant<Scalar>(square);
        adj_ = adjugate<Scalar>(square);
        if (det_ < Scalar(0)) {
            det_ = -det_;
            adj_ = -adj_;
        }
    }

    Vector<Scalar> reduce(Vector<Scalar> x) const {
        const auto d = static_cast<Eigen::Index>(edges_.size());
        Vector<Scalar> sub(d);
        for (Eigen::Index i = 0; i < d; ++i) sub(i) = x(rows_[i]);
        const Vector<Scalar> scaled = adj_ * sub;  // det * coordinates
        for (Eigen::Index i = 0; i < d; ++i) {
            const Scalar shift = floor_div(scaled(i), det_);
            if (shift != Scalar(0)) x -= shift * edges_[static_cast<std::size_t>(i)];
        }
        return x;
    }

private:
    std::vector<Vector<Scalar>> edges_;
    std::vector<Eigen::Index> rows_;
    Scalar det_;
    Matrix<Scalar> adj_;
};

/// Coordinates selecting a nonsingular maximal minor of the edge matrix, or
/// empty when the edges are dependent.
template <class Scalar>
std::vector<Eigen::Index> independent_rows(const std::vector<Vector<Scalar>>& edges, Eigen::Index n) {
    const auto d = static_cast<Eigen::Index>(edges.size());
    std::vector<Vector<Scalar>> picked;
    std::vector<Eigen::Index> rows;
    for (Eigen::Index r = 0; r < n && static_cast<Eigen::Index>(rows.size()) < d; ++r) {
        Vector<Scalar> row(d);
        for (Eigen::Index j = 0; j < d; ++j) row(j) = edges[static_cast<std::size_t>(j)](r);
        picked.push_back(row);
        if (rank(picked, d) == static_cast<Eigen::Index>(picked.size())) {
            rows.push_back(r);
        } else {
            picked.pop_back();
        }
    }
    if (static_cast<Eigen::Index>(rows.size()) < d) rows.clear();
    return rows;
}

inline void next_combination(std::vector<std::size_t>& idx, std::size_t total, bool& done) {
    const std::size_t k = idx.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (idx[i] < total - k + i) {
            ++idx[i];
            for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return;
        }
    }
    done = true;
}

}  // namespace detail

/// Minimal generating set of the monoid c ∩ L.
///
/// Every element of c ∩ L is a nonnegative integer combination of the
/// L-primitive extreme rays and of the lattice points in the half-open
/// parallelepipeds spanned by linearly independent ray subsets. Those
/// parallelepiped points are enumerated as the finite group
/// (L ∩ span c) / <ray subset>, and the irreducible candidates are kept.
template <class Scalar>
std::vector<Vector<Scalar>> hilbert_basis(const RationalCone<Scalar>& c, const LatticeSubgroup<Scalar>& lattice) {
    if (!c.is_pointed()) throw NonPointedCone();
    const Eigen::Index n = c.ambient_rank();
    if (lattice.ambient_rank() != n) {
        throw DimensionMismatch("hilbert_basis: lattice of ambient rank " + std::to_string(lattice.ambient_rank()) +
                                " for a cone in rank " + std::to_string(n));
    }
    if (c.rays().empty()) return {};

    const std::vector<Vector<Scalar>> sub_basis = lattice_in_span(c, lattice);
    if (rank(sub_basis, n) != c.dim()) {
        throw std::invalid_argument("hilbert_basis: lattice does not have full rank in the span of the cone");
    }

    std::vector<Vector<Scalar>> ray_gens;
    for (const auto& r : c.rays()) {
        Scalar j(1);
        while (!lattice.contains(j * r)) j += Scalar(1);
        ray_gens.push_back(j * r);
    }

    std::set<Vector<Scalar>, LexLess> candidates(ray_gens.begin(), ray_gens.end());
    const auto d = static_cast<std::size_t>(c.dim());
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i) idx[i] = i;
    for (bool done = false; !done; detail::next_combination(idx, ray_gens.size(), done)) {
        std::vector<Vector<Scalar>> edges;
        for (std::size_t i : idx) edges.push_back(ray_gens[i]);
        std::vector<Eigen::Index> rows = detail::independent_rows(edges, n);
        if (rows.empty()) continue;
        detail::Parallelepiped<Scalar> box(std::move(edges), std::move(rows));

        std::set<Vector<Scalar>, LexLess> group{Vector<Scalar>::Zero(n)};
        std::vector<Vector<Scalar>> frontier{Vector<Scalar>::Zero(n)};
        while (!frontier.empty()) {
            Vector<Scalar> e = std::move(frontier.back());
            frontier.pop_back();
            for (const auto& b : sub_basis) {
                Vector<Scalar> next = box.reduce(e + b);
                if (group.insert(next).second) frontier.push_back(std::move(next));
            }
        }
        for (const auto& p : group) {
            if (!is_zero(p)) candidates.insert(p);
        }
    }

    std::vector<Vector<Scalar>> basis;
    for (const auto& x : candidates) {
        bool reducible = false;
        for (const auto& g : candidates) {
            if (&g == &x) continue;
            if (c.contains(Vector<Scalar>(x - g))) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(x);
    }
    return basis;
}

}  // namespace horoflex

#endif  // HOROFLEX_LATTICE_HILBERT_BASIS_HPP
