#ifndef HOROFLEX_LATTICE_INTEGER_MATRIX_HPP
#define HOROFLEX_LATTICE_INTEGER_MATRIX_HPP

// Fraction-free elimination kernels over an integral scalar type.

#include "horoflex/lattice/scalar.hpp"

#include <utility>
#include <vector>

namespace horoflex {

template <class Scalar>
Matrix<Scalar> stack_rows(const std::vector<Vector<Scalar>>& rows, Eigen::Index cols) {
    Matrix<Scalar> m(static_cast<Eigen::Index>(rows.size()), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw DimensionMismatch("stack_rows: row " + std::to_string(i) + " has rank " +
                                    std::to_string(rows[i].size()) + ", expected " + std::to_string(cols));
        }
        m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
    }
    return m;
}

/// Rank by Bareiss elimination. Every intermediate entry is a minor of the input,
/// so the divisions are exact.
template <class Scalar>
Eigen::Index rank(Matrix<Scalar> a) {
    const Eigen::Index m = a.rows(), n = a.cols();
    Eigen::Index r = 0;
    Scalar prev(1);
    for (Eigen::Index c = 0; c < n && r < m; ++c) {
        Eigen::Index p = r;
        while (p < m && a(p, c) == Scalar(0)) ++p;
        if (p == m) continue;
        if (p != r) a.row(p).swap(a.row(r));
        for (Eigen::Index i = r + 1; i < m; ++i) {
            for (Eigen::Index j = c + 1; j < n; ++j) {
                a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
            }
            a(i, c) = Scalar(0);
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

template <class Scalar>
Eigen::Index rank(const std::vector<Vector<Scalar>>& rows, Eigen::Index cols) {
    if (rows.empty()) return 0;
    return rank<Scalar>(stack_rows(rows, cols));
}

template <class Scalar>
Scalar determinant(Matrix<Scalar> a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("determinant: matrix is not square");
    const Eigen::Index n = a.rows();
    if (n == 0) return Scalar(1);
    Scalar prev(1);
    bool negate = false;
    for (Eigen::Index k = 0; k < n; ++k) {
        Eigen::Index p = k;
        while (p < n && a(p, k) == Scalar(0)) ++p;
        if (p == n) return Scalar(0);
        if (p != k) {
            a.row(p).swap(a.row(k));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            }
            a(i, k) = Scalar(0);
        }
        prev = a(k, k);
    }
    return negate ? Scalar(-a(n - 1, n - 1)) : a(n - 1, n - 1);
}

/// adj(A) with A * adj(A) = det(A) * I.
template <class Scalar>
Matrix<Scalar> adjugate(const Matrix<Scalar>& a) {
    const Eigen::Index n = a.rows();
    Matrix<Scalar> adj(n, n);
    if (n == 1) {
        adj(0, 0) = Scalar(1);
        return adj;
    }
    Matrix<Scalar> minor(n - 1, n - 1);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            // cofactor C(j, i) lands at adj(i, j)
            for (Eigen::Index r = 0, mr = 0; r < n; ++r) {
                if (r == j) continue;
                for (Eigen::Index c = 0, mc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor(mr, mc++) = a(r, c);
                }
                ++mr;
            }
            Scalar d = determinant<Scalar>(minor);
            adj(i, j) = ((i + j) % 2 == 0) ? d : Scalar(-d);
        }
    }
    return adj;
}

/// Row basis of the rational span, in reduced echelon form scaled to primitive
/// integer rows with positive pivots. This form is unique for a given subspace.
template <class Scalar>
struct Echelon {
    std::vector<Vector<Scalar>> rows;
    std::vector<Eigen::Index> pivots;
};

template <class Scalar>
Echelon<Scalar> reduced_echelon(std::vector<Vector<Scalar>> rows, Eigen::Index cols) {
    for (const auto& r : rows) {
        if (r.size() != cols) throw DimensionMismatch("reduced_echelon: inconsistent row ranks");
    }
    Echelon<Scalar> out;
    std::size_t r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p](c) == Scalar(0)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        if (rows[r](c) < Scalar(0)) rows[r] = -rows[r];
        rows[r] = make_primitive(rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i](c) == Scalar(0)) continue;
            rows[i] = make_primitive<Scalar>(rows[r](c) * rows[i] - rows[i](c) * rows[r]);
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

/// Representative of x modulo span(e.rows) with zeros in every pivot column,
/// scaled by a positive factor and made primitive.
template <class Scalar>
Vector<Scalar> reduce_modulo(Vector<Scalar> x, const Echelon<Scalar>& e) {
    for (std::size_t i = 0; i < e.rows.size(); ++i) {
        const Eigen::Index c = e.pivots[i];
        if (x(c) == Scalar(0)) continue;
        x = e.rows[i](c) * x - x(c) * e.rows[i];
    }
    return make_primitive(std::move(x));
}

/// Row-style Hermite normal form of the lattice spanned by the rows.
/// Pivot columns strictly increase, pivots are positive and the entries above
/// each pivot lie in [0, pivot).
template <class Scalar>
Echelon<Scalar> hermite_normal_form(std::vector<Vector<Scalar>> rows, Eigen::Index cols) {
    for (const auto& row : rows) {
        if (row.size() != cols) throw DimensionMismatch("hermite_normal_form: inconsistent row ranks");
    }
    Echelon<Scalar> out;
    std::size_t r = 0;
    for (Eigen::Index c = 0; c < cols && r < rows.size(); ++c) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t i = r; i < rows.size(); ++i) {
                if (rows[i](c) == Scalar(0)) continue;
                if (best == rows.size() || abs_value(rows[i](c)) < abs_value(rows[best](c))) best = i;
            }
            if (best == rows.size()) break;
            std::swap(rows[best], rows[r]);
            bool done = true;
            for (std::size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i](c) == Scalar(0)) continue;
                const Scalar q = floor_div(rows[i](c), rows[r](c));
                rows[i] -= q * rows[r];
                if (rows[i](c) != Scalar(0)) done = false;
            }
            if (done) break;
        }
        if (r == rows.size() || rows[r](c) == Scalar(0)) continue;
        if (rows[r](c) < Scalar(0)) rows[r] = -rows[r];
        for (std::size_t i = 0; i < r; ++i) {
            const Scalar q = floor_div(rows[i](c), rows[r](c));
            if (q != Scalar(0)) rows[i] -= q * rows[r];
        }
        out.pivots.push_back(c);
        ++r;
    }
    rows.resize(r);
    out.rows = std::move(rows);
    return out;
}

/// Basis of the integer kernel { x in Z^n : A x = 0 }, via unimodular column
/// operations on A tracked in an identity block.
template <class Scalar>
std::vector<Vector<Scalar>> integer_kernel(const Matrix<Scalar>& a) {
    const Eigen::Index m = a.rows(), n = a.cols();
    // Row i of the work matrix is (column i of A, e_i).
    std::vector<Vector<Scalar>> work(static_cast<std::size_t>(n), Vector<Scalar>::Zero(m + n));
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index k = 0; k < m; ++k) work[i](k) = a(k, i);
        work[i](m + i) = Scalar(1);
    }
    std::size_t r = 0;
    for (Eigen::Index c = 0; c < m && r < work.size(); ++c) {
        for (;;) {
            std::size_t best = work.size();
            for (std::size_t i = r; i < work.size(); ++i) {
                if (work[i](c) == Scalar(0)) continue;
                if (best == work.size() || abs_value(work[i](c)) < abs_value(work[best](c))) best = i;
            }
            if (best == work.size()) break;
            std::swap(work[best], work[r]);
            bool done = true;
            for (std::size_t i = r + 1; i < work.size(); ++i) {
                if (work[i](c) == Scalar(0)) continue;
                work[i] -= floor_div(work[i](c), work[r](c)) * work[r];
                if (work[i](c) != Scalar(0)) done = false;
            }
            if (done) {
                ++r;
                break;
            }
        }
    }
    std::vector<Vector<Scalar>> kernel;
    for (std::size_t i = r; i < work.size(); ++i) kernel.push_back(work[i].tail(n));
    if (kernel.empty()) return kernel;
    return hermite_normal_form(std::move(kernel), n).rows;
}

}  // namespace horoflex

#endif  // HOROFLEX_LATTICE_INTEGER_MATRIX_HPP
