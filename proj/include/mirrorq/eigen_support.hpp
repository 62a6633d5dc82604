#pragma once

#include <Eigen/Core>

#include "mirrorq/bigfloat.hpp"
#include "mirrorq/rational.hpp"

// NumTraits so Eigen's fixed-size containers and products work over the
// exact and arbitrary-precision scalars. Decompositions are not used on
// these types; linear solves go through solve_linear_exact below.
namespace Eigen {

template <>
struct NumTraits<mirrorq::Rational> : GenericNumTraits<mirrorq::Rational> {
    typedef mirrorq::Rational Real;
    typedef mirrorq::Rational NonInteger;
    typedef mirrorq::Rational Nested;
    typedef mirrorq::Rational Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 10,
        MulCost = 10
    };
    static inline Real epsilon() { return mirrorq::Rational(0); }
    static inline Real dummy_precision() { return mirrorq::Rational(0); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mirrorq::BigFloat> : GenericNumTraits<mirrorq::BigFloat> {
    typedef mirrorq::BigFloat Real;
    typedef mirrorq::BigFloat NonInteger;
    typedef mirrorq::BigFloat Nested;
    typedef mirrorq::BigFloat Literal;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 2,
        AddCost = 20,
        MulCost = 20
    };
    static inline Real epsilon() { return mirrorq::BigFloat(); }
    static inline Real dummy_precision() { return mirrorq::BigFloat(); }
    static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mirrorq::BigComplex> : GenericNumTraits<mirrorq::BigComplex> {
    typedef mirrorq::BigFloat Real;
    typedef mirrorq::BigComplex NonInteger;
    typedef mirrorq::BigComplex Nested;
    typedef mirrorq::BigComplex Literal;
    enum {
        IsComplex = 1,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 40,
        MulCost = 40
    };
    static inline Real epsilon() { return mirrorq::BigFloat(); }
    static inline Real dummy_precision() { return mirrorq::BigFloat(); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace mirrorq {

using Mat4q = Eigen::Matrix<Rational, 4, 4>;
using Mat4i = Eigen::Matrix<long, 4, 4>;
using Mat4c = Eigen::Matrix<BigComplex, 4, 4>;
using Mat7q = Eigen::Matrix<Rational, 7, 7>;
using Vec7q = Eigen::Matrix<Rational, 7, 1>;

// Cofactor determinant; works over any commutative scalar.
template <class T>
T det4(const Eigen::Matrix<T, 4, 4>& m) {
    auto d3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
        return m(r0, c0) * (m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1)) -
               m(r0, c1) * (m(r1, c0) * m(r2, c2) - m(r1, c2) * m(r2, c0)) +
               m(r0, c2) * (m(r1, c0) * m(r2, c1) - m(r1, c1) * m(r2, c0));
    };
    return m(0, 0) * d3(1, 2, 3, 1, 2, 3) - m(0, 1) * d3(1, 2, 3, 0, 2, 3) +
           m(0, 2) * d3(1, 2, 3, 0, 1, 3) - m(0, 3) * d3(1, 2, 3, 0, 1, 2);
}

// Exact Gaussian elimination with first-nonzero pivoting. Throws on a
// singular matrix.
template <class T, int N>
Eigen::Matrix<T, N, 1> solve_linear_exact(Eigen::Matrix<T, N, N> m,
                                          Eigen::Matrix<T, N, 1> rhs) {
    for (int c = 0; c < N; ++c) {
        int p = c;
        while (p < N && m(p, c) == T()) ++p;
        if (p == N) throw std::runtime_error("solve_linear_exact: singular matrix");
        if (p != c) {
            m.row(c).swap(m.row(p));
            std::swap(rhs(c), rhs(p));
        }
        for (int r = 0; r < N; ++r) {
            if (r == c || m(r, c) == T()) continue;
            T f = m(r, c) / m(c, c);
            for (int k = c; k < N; ++k) m(r, k) -= f * m(c, k);
            rhs(r) -= f * rhs(c);
        }
    }
    Eigen::Matrix<T, N, 1> x;
    for (int i = 0; i < N; ++i) x(i) = rhs(i) / m(i, i);
    return x;
}

}  // namespace mirrorq
