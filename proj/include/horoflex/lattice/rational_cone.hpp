#ifndef HOROFLEX_LATTICE_RATIONAL_CONE_HPP
#define HOROFLEX_LATTICE_RATIONAL_CONE_HPP

#include "horoflex/lattice/integer_matrix.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <vector>

namespace horoflex {

/// Generators of a polyhedral cone: a basis of its lineality space plus one
/// representative per extreme ray modulo that space.
template <class Scalar>
struct ConeGenerators {
    std::vector<Vector<Scalar>> lineality;
    std::vector<Vector<Scalar>> rays;
};

namespace detail {

template <class Scalar>
std::vector<std::size_t> tight_set(const Vector<Scalar>& ray, std::span<const Vector<Scalar>> constraints,
                                   std::size_t processed) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < processed; ++i) {
        if (dot(constraints[i], ray) == Scalar(0)) tight.push_back(i);
    }
    return tight;
}

}  // namespace detail

/// Double description: generators of { l : <a, l> >= 0 for every constraint a }.
/// Lineality is split off as constraints arrive; for the remaining rays the
/// pairwise combinations are filtered by the algebraic adjacency test.
template <class Scalar>
ConeGenerators<Scalar> solve_inequalities(std::span<const Vector<Scalar>> constraints, Eigen::Index n) {
    std::vector<Vector<Scalar>> lin;
    for (Eigen::Index i = 0; i < n; ++i) lin.push_back(Vector<Scalar>::Unit(n, i));
    std::vector<Vector<Scalar>> rays;

    for (std::size_t k = 0; k < constraints.size(); ++k) {
        const Vector<Scalar>& a = constraints[k];
        if (a.size() != n) {
            throw DimensionMismatch("solve_inequalities: constraint " + std::to_string(k) + " has rank " +
                                    std::to_string(a.size()) + ", expected " + std::to_string(n));
        }
        auto split = std::find_if(lin.begin(), lin.end(), [&](const auto& v) { return dot(a, v) != Scalar(0); });
        if (split != lin.end()) {
            Vector<Scalar> v = *split;
            lin.erase(split);
            Scalar av = dot(a, v);
            if (av < Scalar(0)) {
                v = -v;
                av = -av;
            }
            for (auto& w : lin) w = make_primitive<Scalar>(av * w - dot(a, w) * v);
            for (auto& r : rays) r = make_primitive<Scalar>(av * r - dot(a, r) * v);
            rays.push_back(make_primitive(std::move(v)));
            continue;
        }

        std::vector<Vector<Scalar>> pos, zero, neg;
        std::vector<Scalar> pos_val, neg_val;
        for (auto& r : rays) {
            const Scalar s = dot(a, r);
            if (s > Scalar(0)) {
                pos.push_back(r);
                pos_val.push_back(s);
            } else if (s < Scalar(0)) {
                neg.push_back(r);
                neg_val.push_back(s);
            } else {
                zero.push_back(r);
            }
        }
        std::vector<Vector<Scalar>> next = pos;
        next.insert(next.end(), zero.begin(), zero.end());
        if (!pos.empty() && !neg.empty()) {
            const Eigen::Index two_face_rank = n - static_cast<Eigen::Index>(lin.size()) - 2;
            std::vector<std::vector<std::size_t>> pos_tight, neg_tight;
            for (const auto& r : pos) pos_tight.push_back(detail::tight_set<Scalar>(r, constraints, k));
            for (const auto& r : neg) neg_tight.push_back(detail::tight_set<Scalar>(r, constraints, k));
            for (std::size_t i = 0; i < pos.size(); ++i) {
                for (std::size_t j = 0; j < neg.size(); ++j) {
                    std::vector<std::size_t> common;
                    std::set_intersection(pos_tight[i].begin(), pos_tight[i].end(), neg_tight[j].begin(),
                                          neg_tight[j].end(), std::back_inserter(common));
                    if (static_cast<Eigen::Index>(common.size()) < two_face_rank) continue;
                    std::vector<Vector<Scalar>> rows;
                    for (std::size_t c : common) rows.push_back(constraints[c]);
                    if (rank(rows, n) != two_face_rank) continue;
                    next.push_back(make_primitive<Scalar>(pos_val[i] * neg[j] - neg_val[j] * pos[i]));
                }
            }
        }
        rays = std::move(next);
    }

    ConeGenerators<Scalar> out;
    Echelon<Scalar> e = reduced_echelon(lin, n);
    for (auto& r : rays) out.rays.push_back(reduce_modulo(r, e));
    sort_unique(out.rays);
    out.lineality = std::move(e.rows);
    return out;
}

/// A rational polyhedral cone held in both representations. Rays and facet
/// normals are primitive and sorted lexicographically; rays are taken modulo
/// the lineality space and facet normals modulo the equations.
template <class Scalar>
class RationalCone {
public:
    using VectorType = Vector<Scalar>;

    /// cone(gens) in Q^n.
    static RationalCone from_generators(std::span<const VectorType> gens, Eigen::Index ambient_rank) {
        for (const auto& g : gens) {
            if (g.size() != ambient_rank) {
                throw DimensionMismatch("RationalCone: generator of rank " + std::to_string(g.size()) +
                                        " in ambient rank " + std::to_string(ambient_rank));
            }
        }
        RationalCone c;
        c.ambient_rank_ = ambient_rank;
        ConeGenerators<Scalar> dual = solve_inequalities(gens, ambient_rank);
        c.equations_ = std::move(dual.lineality);
        c.facet_normals_ = std::move(dual.rays);

        std::vector<VectorType> inequalities = c.facet_normals_;
        for (const auto& e : c.equations_) {
            inequalities.push_back(e);
            inequalities.push_back(-e);
        }
        ConeGenerators<Scalar> primal =
            solve_inequalities(std::span<const VectorType>(inequalities), ambient_rank);
        c.lineality_ = std::move(primal.lineality);
        c.rays_ = std::move(primal.rays);
        return c;
    }

    static RationalCone from_generators(const std::vector<VectorType>& gens, Eigen::Index ambient_rank) {
        return from_generators(std::span<const VectorType>(gens), ambient_rank);
    }

    const std::vector<VectorType>& rays() const { return rays_; }
    const std::vector<VectorType>& lineality() const { return lineality_; }
    const std::vector<VectorType>& facet_normals() const { return facet_normals_; }
    const std::vector<VectorType>& equations() const { return equations_; }
    Eigen::Index ambient_rank() const { return ambient_rank_; }
    Eigen::Index dim() const { return ambient_rank_ - static_cast<Eigen::Index>(equations_.size()); }
    bool is_pointed() const { return lineality_.empty(); }

    bool contains(const VectorType& x) const {
        for (const auto& e : equations_) {
            if (dot(e, x) != Scalar(0)) return false;
        }
        for (const auto& f : facet_normals_) {
            if (dot(f, x) < Scalar(0)) return false;
        }
        return true;
    }

    /// Every generator (rays and both signs of the lineality basis).
    std::vector<VectorType> generators() const {
        std::vector<VectorType> g = rays_;
        for (const auto& l : lineality_) {
            g.push_back(l);
            g.push_back(-l);
        }
        return g;
    }

    friend bool operator==(const RationalCone& a, const RationalCone& b) {
        auto same = [](const std::vector<VectorType>& x, const std::vector<VectorType>& y) {
            return x.size() == y.size() && std::equal(x.begin(), x.end(), y.begin(),
                                                      [](const auto& u, const auto& v) { return equal(u, v); });
        };
        return a.ambient_rank_ == b.ambient_rank_ && same(a.rays_, b.rays_) && same(a.lineality_, b.lineality_);
    }

private:
    RationalCone() = default;

    std::vector<VectorType> rays_;
    std::vector<VectorType> lineality_;
    std::vector<VectorType> facet_normals_;
    std::vector<VectorType> equations_;
    Eigen::Index ambient_rank_ = 0;
};

using Cone = RationalCone<Integer>;

template <class Scalar>
bool is_pointed(const RationalCone<Scalar>& c) {
    return c.is_pointed();
}

/// { l : <l, x> >= 0 for all x in c }, recomputed from c's facet description.
template <class Scalar>
RationalCone<Scalar> dual_cone(const RationalCone<Scalar>& c) {
    std::vector<Vector<Scalar>> gens = c.facet_normals();
    for (const auto& e : c.equations()) {
        gens.push_back(e);
        gens.push_back(-e);
    }
    return RationalCone<Scalar>::from_generators(gens, c.ambient_rank());
}

/// A face, identified by the facet normals vanishing on it (closed under
/// "vanishes on every ray of the face") and the rays it contains.
struct FaceDescriptor {
    std::vector<std::size_t> zero_normals;
    std::vector<std::size_t> span_rays;
    Eigen::Index dim = 0;

    friend bool operator==(const FaceDescriptor&, const FaceDescriptor&) = default;
};

/// Face inclusion: a is contained in b.
inline bool face_contains(const FaceDescriptor& b, const FaceDescriptor& a) {
    return std::includes(b.span_rays.begin(), b.span_rays.end(), a.span_rays.begin(), a.span_rays.end()) &&
           a.dim <= b.dim;
}

/// The face cut out by the given facet normals.
template <class Scalar>
FaceDescriptor face_from_normals(const RationalCone<Scalar>& c, std::vector<std::size_t> normals) {
    std::sort(normals.begin(), normals.end());
    normals.erase(std::unique(normals.begin(), normals.end()), normals.end());
    for (std::size_t j : normals) {
        if (j >= c.facet_normals().size()) {
            throw std::out_of_range("face_from_normals: facet index " + std::to_string(j) + " out of range");
        }
    }
    FaceDescriptor f;
    for (std::size_t r = 0; r < c.rays().size(); ++r) {
        const bool on_face = std::all_of(normals.begin(), normals.end(), [&](std::size_t j) {
            return dot(c.facet_normals()[j], c.rays()[r]) == Scalar(0);
        });
        if (on_face) f.span_rays.push_back(r);
    }
    // closure: every normal vanishing on all rays of the face
    for (std::size_t j = 0; j < c.facet_normals().size(); ++j) {
        const bool vanishes = std::all_of(f.span_rays.begin(), f.span_rays.end(), [&](std::size_t r) {
            return dot(c.facet_normals()[j], c.rays()[r]) == Scalar(0);
        });
        if (vanishes) f.zero_normals.push_back(j);
    }
    std::vector<Vector<Scalar>> span = c.lineality();
    for (std::size_t r : f.span_rays) span.push_back(c.rays()[r]);
    f.dim = rank(span, c.ambient_rank());
    return f;
}

/// The smallest face containing the given rays.
template <class Scalar>
FaceDescriptor face_from_rays(const RationalCone<Scalar>& c, const std::vector<std::size_t>& ray_set) {
    std::vector<std::size_t> normals;
    for (std::size_t j = 0; j < c.facet_normals().size(); ++j) {
        const bool vanishes = std::all_of(ray_set.begin(), ray_set.end(), [&](std::size_t r) {
            return dot(c.facet_normals()[j], c.rays()[r]) == Scalar(0);
        });
        if (vanishes) normals.push_back(j);
    }
    return face_from_normals(c, std::move(normals));
}

/// True when f is literally one of c's faces (closed normal set, matching rays).
template <class Scalar>
bool is_face(const RationalCone<Scalar>& c, const FaceDescriptor& f) {
    for (std::size_t j : f.zero_normals) {
        if (j >= c.facet_normals().size()) return false;
    }
    for (std::size_t r : f.span_rays) {
        if (r >= c.rays().size()) return false;
    }
    return face_from_normals(c, f.zero_normals) == f;
}

/// Meet of two faces.
template <class Scalar>
FaceDescriptor face_intersection(const RationalCone<Scalar>& c, const FaceDescriptor& a, const FaceDescriptor& b) {
    std::vector<std::size_t> normals = a.zero_normals;
    normals.insert(normals.end(), b.zero_normals.begin(), b.zero_normals.end());
    return face_from_normals(c, std::move(normals));
}

/// All faces of c, each once, ordered by dimension then by ray set.
template <class Scalar>
std::vector<FaceDescriptor> face_lattice(const RationalCone<Scalar>& c) {
    std::map<std::vector<std::size_t>, FaceDescriptor> seen;
    std::vector<FaceDescriptor> queue{face_from_normals(c, {})};
    seen.emplace(queue.front().zero_normals, queue.front());
    while (!queue.empty()) {
        FaceDescriptor f = std::move(queue.back());
        queue.pop_back();
        for (std::size_t j = 0; j < c.facet_normals().size(); ++j) {
            if (std::binary_search(f.zero_normals.begin(), f.zero_normals.end(), j)) continue;
            std::vector<std::size_t> normals = f.zero_normals;
            normals.push_back(j);
            FaceDescriptor g = face_from_normals(c, std::move(normals));
            if (seen.emplace(g.zero_normals, g).second) queue.push_back(std::move(g));
        }
    }
    std::vector<FaceDescriptor> faces;
    for (auto& [key, f] : seen) faces.push_back(std::move(f));
    std::sort(faces.begin(), faces.end(), [](const FaceDescriptor& a, const FaceDescriptor& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.span_rays < b.span_rays;
    });
    return faces;
}

}  // namespace horoflex

#endif  // HOROFLEX_LATTICE_RATIONAL_CONE_HPP
