#pragma once

#include "mirrorq/rational.hpp"

namespace mirrorq {

// Rational dual number a + b*delta, delta^2 = 0. Used to differentiate the
// vector-field numerators exactly (jacobian cross-check).
struct Dual {
    Rational a, b;

    Dual() = default;
    Dual(long v) : a(v) {}
    Dual(Rational v) : a(std::move(v)) {}
    Dual(Rational v, Rational d) : a(std::move(v)), b(std::move(d)) {}

    friend Dual operator+(const Dual& x, const Dual& y) { return {x.a + y.a, x.b + y.b}; }
    friend Dual operator-(const Dual& x, const Dual& y) { return {x.a - y.a, x.b - y.b}; }
    friend Dual operator-(const Dual& x) { return {-x.a, -x.b}; }
    friend Dual operator*(const Dual& x, const Dual& y) {
        return {x.a * y.a, x.a * y.b + x.b * y.a};
    }
    friend Dual operator*(const Rational& k, const Dual& y) { return {k * y.a, k * y.b}; }
    friend Dual operator*(long k, const Dual& y) { return Rational(k) * y; }
    Dual& operator+=(const Dual& y) { a += y.a; b += y.b; return *this; }
    friend bool operator==(const Dual& x, const Dual& y) { return x.a == y.a && x.b == y.b; }
};

}  // namespace mirrorq
