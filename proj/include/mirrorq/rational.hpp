#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace mirrorq {

// Exact rational scalar, a thin value wrapper over GMP's mpq_class.
// Kept in canonical form (reduced, positive denominator) after every
// operation. Plain-value operators on purpose: no expression templates
// leaking into Eigen or the series kernels.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_((signed long)n) {}
    Rational(long num, long den) : v_((signed long)num, (signed long)den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    // Accepts "p", "p/q", optional leading '-'.
    explicit Rational(const std::string& s) {
        if (mpq_set_str(v_.get_mpq_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (mpz_sgn(mpq_denref(v_.get_mpq_t())) == 0)
            throw std::domain_error("Rational: zero denominator in '" + s + "'");
        v_.canonicalize();
    }

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }
    std::string str() const { return v_.get_str(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

inline Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

inline Rational pow(const Rational& a, long e) {
    if (e < 0) {
        if (a.is_zero()) throw std::domain_error("Rational: 0 to negative power");
        return Rational(1) / pow(a, -e);
    }
    Rational r(1), b = a;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& a);

}  // namespace mirrorq
