#pragma once

#include <array>
#include <stdexcept>

#include "mirrorq/eigen_support.hpp"
#include "mirrorq/report.hpp"

namespace mirrorq {

// Integer data: monodromies around the two singular fibers and the two
// pairing forms (homology-symplectic and de Rham).
Mat4i monodromy_m0();
Mat4i monodromy_m1();
Mat4i form_psi();
Mat4i form_phi();

CheckReport check_monodromy_identities();

// Element of the Borel group (upper-triangular, g^T Phi g = Phi) in the
// six-factor coordinates (g1, g2 multiplicative and nonzero; g3..g6
// additive). Works over any field scalar.
template <class T>
struct GroupElement {
    std::array<T, 6> g;

    GroupElement() : g{T(1), T(1), T(), T(), T(), T()} {}
    explicit GroupElement(std::array<T, 6> c) : g(std::move(c)) {
        if (g[0] == T() || g[1] == T())
            throw std::domain_error("GroupElement: g1 and g2 must be nonzero");
    }
    static GroupElement identity() { return GroupElement(); }
    const T& operator[](int i) const { return g.at(i); }
};

template <class T>
Eigen::Matrix<T, 4, 4> g_to_matrix(const GroupElement<T>& e) {
    const T &g1 = e[0], &g2 = e[1], &g3 = e[2], &g4 = e[3], &g5 = e[4], &g6 = e[5];
    T one(1);
    Eigen::Matrix<T, 4, 4> m;
    m(0, 0) = one / g1;
    m(0, 1) = -g3 / g1;
    m(0, 2) = (-(g3 * g6) + g4) / g1;
    m(0, 3) = (-(g3 * g4) + g5) / g1;
    m(1, 0) = T();
    m(1, 1) = one / g2;
    m(1, 2) = g6 / g2;
    m(1, 3) = g4 / g2;
    m(2, 0) = T();
    m(2, 1) = T();
    m(2, 2) = g2;
    m(2, 3) = g2 * g3;
    m(3, 0) = T();
    m(3, 1) = T();
    m(3, 2) = T();
    m(3, 3) = g1;
    return m;
}

// Coordinates read back off a matrix in the canonical pattern.
template <class T>
GroupElement<T> g_from_matrix(const Eigen::Matrix<T, 4, 4>& m) {
    T g1 = m(3, 3);
    T g2 = m(2, 2);
    if (g1 == T() || g2 == T())
        throw std::domain_error("g_from_matrix: zero diagonal coordinate");
    T g3 = m(2, 3) / g2;
    T g4 = m(1, 3) * g2;
    T g6 = m(1, 2) * g2;
    T g5 = m(0, 3) * g1 + g3 * g4;
    return GroupElement<T>({g1, g2, g3, g4, g5, g6});
}

template <class T>
GroupElement<T> g_mul(const GroupElement<T>& a, const GroupElement<T>& b) {
    Eigen::Matrix<T, 4, 4> m = g_to_matrix(a) * g_to_matrix(b);
    return g_from_matrix(m);
}

// Closed-form inverse in coordinates.
template <class T>
GroupElement<T> g_inv(const GroupElement<T>& e) {
    const T &g1 = e[0], &g2 = e[1], &g3 = e[2], &g4 = e[3], &g5 = e[4], &g6 = e[5];
    T one(1);
    return GroupElement<T>({one / g1, one / g2, -(g2 * g3) / g1,
                            (g3 * g6 - g4) / (g1 * g2),
                            (-(g3 * g3 * g6) + 2 * g3 * g4 - g5) / (g1 * g1),
                            -g6 / (g2 * g2)});
}

// Product of the six one-parameter factors; must reproduce g_to_matrix.
template <class T>
Eigen::Matrix<T, 4, 4> g_factor_product(const std::array<T, 6>& c) {
    T one(1);
    auto mk = [&](auto fill) {
        Eigen::Matrix<T, 4, 4> m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = i == j ? one : T();
        fill(m);
        return m;
    };
    auto f1 = mk([&](auto& m) { m(0, 0) = one / c[0]; m(3, 3) = c[0]; });
    auto f2 = mk([&](auto& m) { m(1, 1) = one / c[1]; m(2, 2) = c[1]; });
    auto f3 = mk([&](auto& m) { m(0, 1) = -c[2]; m(2, 3) = c[2]; });
    auto f4 = mk([&](auto& m) { m(0, 2) = c[3]; m(1, 3) = c[3]; });
    auto f5 = mk([&](auto& m) { m(0, 3) = c[4]; });
    auto f6 = mk([&](auto& m) { m(1, 2) = c[5]; });
    return f1 * f2 * f3 * f4 * f5 * f6;
}

// Derived coordinates t7, t8, t9 from a 7-tuple (t5 != 0, t4 != t0^5).
template <class T>
std::array<T, 3> derived_triple(const std::array<T, 7>& t) {
    const T &t0 = t[0], &t2 = t[2], &t3 = t[3], &t4 = t[4], &t5 = t[5], &t6 = t[6];
    T t03 = t0 * t0 * t0;
    T t04 = t03 * t0;
    T t05 = t04 * t0;
    T c3125(3125), c625(625);
    T num7 = (c3125 * t04 + t3) * t6 - (c3125 * t03 + t2) * t5;
    T den7 = c625 * (t4 - t05);
    if (den7 == T()) throw std::domain_error("derived_triple: t4 = t0^5");
    if (t5 == T()) throw std::domain_error("derived_triple: t5 = 0");
    return {num7 / den7, c625 * (t05 - t4) / t5, (-(c3125 * t04) - t3) / t5};
}

// Right action on the seven coordinate functions.
template <class T>
std::array<T, 7> action_on_t(const std::array<T, 7>& t, const GroupElement<T>& e) {
    const T &g1 = e[0], &g2 = e[1], &g3 = e[2], &g4 = e[3], &g5 = e[4], &g6 = e[5];
    auto d = derived_triple(t);
    const T &t7 = d[0], &t8 = d[1], &t9 = d[2];
    T g1_2 = g1 * g1, g1_3 = g1_2 * g1, g1_4 = g1_2 * g1_2, g1_5 = g1_4 * g1;
    return {t[0] * g1,
            t[1] * g1_2 + t7 * (g1 * g2 * g3) + t9 * (g1 / g2 * g4) - g3 * g4 + g5,
            t[2] * g1_3 + t[6] * (g1_2 * g2 * g3) + t8 * (g1_2 / g2 * g4),
            t[3] * g1_4 + t[5] * (g1_3 * g2 * g3),
            t[4] * g1_5,
            t[5] * g1_3 * g2,
            t[6] * g1_2 * g2 + t8 * (g1_2 / g2 * g6)};
}

// The induced action on the derived coordinates (closed forms).
template <class T>
std::array<T, 3> action_on_derived(const std::array<T, 3>& d, const GroupElement<T>& e) {
    const T &g1 = e[0], &g2 = e[1], &g3 = e[2], &g4 = e[3], &g6 = e[5];
    const T &t7 = d[0], &t8 = d[1], &t9 = d[2];
    return {t7 * (g1 * g2) + t9 * (g1 / g2 * g6) - g3 * g6 + g4,
            t8 * (g1 * g1 / g2),
            t9 * (g1 / g2) - g3};
}

// t10 = 625 (t4 - t0^5) transforms with weight g1^5, like t4.
template <class T>
T t10_value(const std::array<T, 7>& t) {
    T t0 = t[0];
    return T(625) * (t[4] - t0 * t0 * t0 * t0 * t0);
}

template <class T>
T action_on_t10(const T& t10, const GroupElement<T>& e) {
    const T& g1 = e[0];
    return t10 * (g1 * g1) * (g1 * g1) * g1;
}

}  // namespace mirrorq
