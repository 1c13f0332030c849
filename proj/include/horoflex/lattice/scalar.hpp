#ifndef HOROFLEX_LATTICE_SCALAR_HPP
#define HOROFLEX_LATTICE_SCALAR_HPP

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace horoflex {

/// Arbitrary-precision integer used for every lattice computation.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
/// Arbitrary-precision rational used for polynomial coefficients.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// A point of the ambient character lattice.
using LatticeVector = Vector<Integer>;

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class NonPointedCone : public std::domain_error {
public:
    NonPointedCone() : std::domain_error("non-pointed: Hilbert basis undefined here") {}
    using std::domain_error::domain_error;
};

template <class Scalar>
Scalar abs_value(const Scalar& a) {
    return a < Scalar(0) ? Scalar(-a) : a;
}

template <class Scalar>
Scalar gcd_of(const Scalar& a, const Scalar& b) {
    if constexpr (std::is_integral_v<Scalar>) {
        return std::gcd(a, b);
    } else {
        return boost::multiprecision::gcd(a, b);
    }
}

/// Floor of a / b for b != 0.
template <class Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
    Scalar q = a / b;  // truncates toward zero
    if ((a % b != Scalar(0)) && ((a < Scalar(0)) != (b < Scalar(0)))) {
        q -= Scalar(1);
    }
    return q;
}

template <class Scalar>
Scalar content(const Vector<Scalar>& v) {
    Scalar g(0);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        g = gcd_of(g, abs_value(v(i)));
    }
    return g;
}

/// Divides by the gcd of the entries. The zero vector is returned unchanged.
template <class Scalar>
Vector<Scalar> make_primitive(Vector<Scalar> v) {
    const Scalar g = content(v);
    if (g > Scalar(1)) {
        for (Eigen::Index i = 0; i < v.size(); ++i) v(i) /= g;
    }
    return v;
}

template <class Scalar>
bool is_zero(const Vector<Scalar>& v) {
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (v(i) != Scalar(0)) return false;
    }
    return true;
}

template <class Scalar>
Scalar dot(const Vector<Scalar>& a, const Vector<Scalar>& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("dot: vectors of ranks " + std::to_string(a.size()) + " and " +
                                std::to_string(b.size()));
    }
    Scalar s(0);
    for (Eigen::Index i = 0; i < a.size(); ++i) s += a(i) * b(i);
    return s;
}

template <class Scalar>
bool lex_less(const Vector<Scalar>& a, const Vector<Scalar>& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
}

struct LexLess {
    template <class Scalar>
    bool operator()(const Vector<Scalar>& a, const Vector<Scalar>& b) const {
        return lex_less(a, b);
    }
};

template <class Scalar>
bool equal(const Vector<Scalar>& a, const Vector<Scalar>& b) {
    return a.size() == b.size() && std::equal(a.data(), a.data() + a.size(), b.data());
}

/// Sorts lexicographically and drops duplicates.
template <class Scalar>
void sort_unique(std::vector<Vector<Scalar>>& vs) {
    std::sort(vs.begin(), vs.end(), LexLess{});
    vs.erase(std::unique(vs.begin(), vs.end(), [](const auto& a, const auto& b) { return equal(a, b); }),
             vs.end());
}

template <class Scalar>
Vector<Scalar> make_vector(std::initializer_list<long long> entries) {
    Vector<Scalar> v(static_cast<Eigen::Index>(entries.size()));
    Eigen::Index i = 0;
    for (long long e : entries) v(i++) = Scalar(e);
    return v;
}

inline LatticeVector lattice_vector(std::initializer_list<long long> entries) {
    return make_vector<Integer>(entries);
}

template <class Scalar>
std::string to_string(const Vector<Scalar>& v) {
    std::string out = "(";
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        if constexpr (std::is_integral_v<Scalar>) {
            out += std::to_string(v(i));
        } else {
            out += v(i).str();
        }
    }
    return out + ")";
}

}  // namespace horoflex

#endif  // HOROFLEX_LATTICE_SCALAR_HPP
