#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

#include "mirrorq/rational.hpp"
#include "mirrorq/series.hpp"

namespace mirrorq {

// Arbitrary-precision real over MPFR, RAII, value semantics. Each value
// carries its own precision; binary operations compute at the larger of
// the operand precisions.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t prec = 64) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
    BigFloat(const BigFloat& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    BigFloat(BigFloat&& o) noexcept { mpfr_init2(x_, 64); mpfr_swap(x_, o.x_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(x_, mpfr_get_prec(o.x_));
            mpfr_set(x_, o.x_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept { mpfr_swap(x_, o.x_); return *this; }
    ~BigFloat() { mpfr_clear(x_); }

    static BigFloat from_long(long v, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_si(r.x_, v, MPFR_RNDN);
        return r;
    }
    static BigFloat from_rational(const Rational& q, mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_set_q(r.x_, q.raw().get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static BigFloat from_string(const char* s, mpfr_prec_t prec) {
        BigFloat r(prec);
        if (mpfr_set_str(r.x_, s, 10, MPFR_RNDN) != 0)
            throw std::invalid_argument(std::string("BigFloat: cannot parse '") + s + "'");
        return r;
    }
    static BigFloat pi(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.x_, MPFR_RNDN);
        return r;
    }
    static BigFloat zeta3(mpfr_prec_t prec) {
        BigFloat r(prec);
        mpfr_zeta_ui(r.x_, 3, MPFR_RNDN);
        return r;
    }
    // 2^e, e possibly negative: the tolerance scale used everywhere.
    static BigFloat pow2(long e, mpfr_prec_t prec = 64) {
        BigFloat r(prec);
        mpfr_set_si_2exp(r.x_, 1, e, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
    bool is_zero() const { return mpfr_zero_p(x_); }
    int sign() const { return mpfr_sgn(x_); }
    mpfr_srcptr raw() const { return x_; }

    std::string str(int digits = 0) const;  // decimal, round-trippable for the given prec

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_neg(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) { *this = *this + o; return *this; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.x_, b.x_); }

    friend BigFloat abs(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_abs(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat log(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_log(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat exp(const BigFloat& a) {
        BigFloat r(a.prec());
        mpfr_exp(r.x_, a.x_, MPFR_RNDN);
        return r;
    }
    friend BigFloat hypot(const BigFloat& a, const BigFloat& b) {
        BigFloat r(std::max(a.prec(), b.prec()));
        mpfr_hypot(r.x_, a.x_, b.x_, MPFR_RNDN);
        return r;
    }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

private:
    mpfr_t x_;
};

// Complex number over BigFloat. Only the field operations the period
// pipeline needs; no transcendental functions of complex arguments.
struct BigComplex {
    BigFloat re, im;

    BigComplex() = default;
    // Small exact integers (group coordinates, polynomial constants); they
    // promote to the other operand's precision in arithmetic.
    BigComplex(long v) : re(BigFloat::from_long(v, 64)), im(64) {}
    BigComplex(int v) : BigComplex((long)v) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    static BigComplex from_real(const BigFloat& r) { return {r, BigFloat(r.prec())}; }
    static BigComplex from_rational(const Rational& q, mpfr_prec_t prec) {
        return {BigFloat::from_rational(q, prec), BigFloat(prec)};
    }
    static BigComplex i_unit(mpfr_prec_t prec) {
        return {BigFloat(prec), BigFloat::from_long(1, prec)};
    }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    BigComplex& operator+=(const BigComplex& o) { re += o.re; im += o.im; return *this; }
    friend bool operator==(const BigComplex& a, const BigComplex& b) {
        return a.re == b.re && a.im == b.im;
    }

    friend BigFloat abs(const BigComplex& a) { return hypot(a.re, a.im); }
    friend BigComplex conj(const BigComplex& a) { return {a.re, -a.im}; }
};

inline BigComplex pow_int(BigComplex b, long e, mpfr_prec_t prec) {
    BigComplex r = BigComplex::from_rational(Rational(1), prec);
    bool inv = e < 0;
    if (inv) e = -e;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    if (inv) r = BigComplex::from_rational(Rational(1), prec) / r;
    return r;
}

// Exact-rational series evaluated at a BigFloat point by Horner; the
// second member is |last nonzero term|, the caller's tail certificate.
std::pair<BigFloat, BigFloat> evaluate_with_tail(const TruncSeries<>&, const BigFloat& x);

}  // namespace mirrorq
