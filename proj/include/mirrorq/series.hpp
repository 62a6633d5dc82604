#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "mirrorq/rational.hpp"

namespace mirrorq {

// Variable tag of a truncated series. Arithmetic between series requires
// matching tags; eps-series are fixed at order 3 by the callers that build
// them (three epsilon-derivatives are the most any construction needs).
enum class Var : unsigned char { Ztilde, Q, Eps };

inline const char* var_name(Var v) {
    switch (v) {
        case Var::Ztilde: return "ztilde";
        case Var::Q: return "q";
        case Var::Eps: return "eps";
    }
    return "?";
}

inline Var var_from_name(const std::string& s) {
    if (s == "ztilde") return Var::Ztilde;
    if (s == "q") return Var::Q;
    if (s == "eps") return Var::Eps;
    throw std::invalid_argument("unknown series variable '" + s + "'");
}

// Truncated power series c0 + c1 x + ... + cN x^N over an exact scalar.
// Every binary operation returns order = min of the operand orders and
// never extends precision.
template <class T = Rational>
class TruncSeries {
public:
    TruncSeries(Var v, int order) : var_(v), c_(check_order(order) + 1) {}

    static TruncSeries constant(Var v, int order, const T& c0) {
        TruncSeries s(v, order);
        s.c_[0] = c0;
        return s;
    }
    static TruncSeries monomial(Var v, int order, int k, const T& ck = T(1)) {
        TruncSeries s(v, order);
        if (k < 0) throw std::invalid_argument("monomial: negative exponent");
        if (k <= order) s.c_[k] = ck;
        return s;
    }

    Var var() const { return var_; }
    int order() const { return (int)c_.size() - 1; }

    const T& operator[](int i) const { return c_.at(i); }
    T& operator[](int i) { return c_.at(i); }

    bool is_zero() const {
        for (const T& c : c_)
            if (!(c == T())) return false;
        return true;
    }
    // Largest index with a nonzero coefficient; -1 if all vanish.
    int top_nonzero() const {
        for (int i = order(); i >= 0; --i)
            if (!(c_[i] == T())) return i;
        return -1;
    }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

private:
    static int check_order(int order) {
        if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
        return order;
    }
    Var var_;
    std::vector<T> c_;
};

namespace detail {
inline void require_same_var(Var a, Var b) {
    if (a != b)
        throw std::invalid_argument(std::string("series variable mismatch: ") + var_name(a) +
                                    " vs " + var_name(b));
}
}  // namespace detail

template <class T>
TruncSeries<T> truncated(const TruncSeries<T>& s, int order) {
    if (order >= s.order()) return s;
    TruncSeries<T> r(s.var(), order);
    for (int i = 0; i <= order; ++i) r[i] = s[i];
    return r;
}

template <class T>
TruncSeries<T> retagged(const TruncSeries<T>& s, Var v) {
    TruncSeries<T> r(v, s.order());
    for (int i = 0; i <= s.order(); ++i) r[i] = s[i];
    return r;
}

template <class T>
TruncSeries<T> operator+(const TruncSeries<T>& a, const TruncSeries<T>& b) {
    detail::require_same_var(a.var(), b.var());
    int n = std::min(a.order(), b.order());
    TruncSeries<T> r(a.var(), n);
    for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
    return r;
}

template <class T>
TruncSeries<T> operator-(const TruncSeries<T>& a, const TruncSeries<T>& b) {
    detail::require_same_var(a.var(), b.var());
    int n = std::min(a.order(), b.order());
    TruncSeries<T> r(a.var(), n);
    for (int i = 0; i <= n; ++i) r[i] = a[i] - b[i];
    return r;
}

template <class T>
TruncSeries<T> operator-(const TruncSeries<T>& a) {
    TruncSeries<T> r(a.var(), a.order());
    for (int i = 0; i <= a.order(); ++i) r[i] = -a[i];
    return r;
}

template <class T>
TruncSeries<T> operator*(const TruncSeries<T>& a, const TruncSeries<T>& b) {
    detail::require_same_var(a.var(), b.var());
    int n = std::min(a.order(), b.order());
    TruncSeries<T> r(a.var(), n);
    for (int i = 0; i <= n; ++i) {
        T s{};
        for (int j = 0; j <= i; ++j) s += a[j] * b[i - j];
        r[i] = s;
    }
    return r;
}

template <class T>
TruncSeries<T> operator*(const T& k, const TruncSeries<T>& s) {
    TruncSeries<T> r(s.var(), s.order());
    for (int i = 0; i <= s.order(); ++i) r[i] = k * s[i];
    return r;
}

template <class T>
TruncSeries<T> operator*(long k, const TruncSeries<T>& s) {
    return T(k) * s;
}

template <class T>
TruncSeries<T> operator/(const TruncSeries<T>& a, const TruncSeries<T>& b) {
    detail::require_same_var(a.var(), b.var());
    if (b[0] == T())
        throw std::domain_error("series division: divisor has zero constant term");
    int n = std::min(a.order(), b.order());
    TruncSeries<T> r(a.var(), n);
    for (int i = 0; i <= n; ++i) {
        T s = a[i];
        for (int j = 1; j <= i; ++j) s -= b[j] * r[i - j];
        r[i] = s / b[0];
    }
    return r;
}

// theta = x d/dx, the logarithmic derivative: c_n -> n c_n.
template <class T>
TruncSeries<T> theta(const TruncSeries<T>& s) {
    TruncSeries<T> r(s.var(), s.order());
    for (int i = 1; i <= s.order(); ++i) r[i] = T(i) * s[i];
    return r;
}

// Multiplication by x^k: coefficients shift up, order unchanged.
template <class T>
TruncSeries<T> shift_up(const TruncSeries<T>& s, int k) {
    if (k < 0) throw std::invalid_argument("shift_up: negative shift");
    TruncSeries<T> r(s.var(), s.order());
    for (int i = s.order(); i >= k; --i) r[i] = s[i - k];
    return r;
}

// outer(inner(x)); inner must have zero constant term. Result carries
// inner's variable tag and order = min of the two orders.
template <class T>
TruncSeries<T> compose(const TruncSeries<T>& outer, const TruncSeries<T>& inner) {
    if (!(inner[0] == T()))
        throw std::domain_error("compose: inner series has nonzero constant term");
    int n = std::min(outer.order(), inner.order());
    TruncSeries<T> in = truncated(inner, n);
    TruncSeries<T> r(inner.var(), n);
    for (int i = n; i >= 0; --i) {  // Horner
        r = r * in;
        r[0] += outer[i];
    }
    return r;
}

// exp of a series with zero constant term, via e' = s' e.
template <class T>
TruncSeries<T> exp_series(const TruncSeries<T>& s) {
    if (!(s[0] == T()))
        throw std::domain_error("exp_series: nonzero constant term");
    int n = s.order();
    TruncSeries<T> r(s.var(), n);
    r[0] = T(1);
    for (int i = 1; i <= n; ++i) {
        T acc{};
        for (int k = 1; k <= i; ++k) acc += T(k) * s[k] * r[i - k];
        r[i] = acc / T(i);
    }
    return r;
}

// Compositional inverse of s = c1 x + O(x^2), c1 != 0 (Newton iteration).
template <class T>
TruncSeries<T> revert(const TruncSeries<T>& s) {
    if (!(s[0] == T()) || s[1] == T())
        throw std::domain_error("revert: series must have valuation exactly 1");
    int n = s.order();
    TruncSeries<T> id = TruncSeries<T>::monomial(s.var(), n, 1);
    TruncSeries<T> ds(s.var(), n);
    for (int i = 0; i < n; ++i) ds[i] = T(i + 1) * s[i + 1];
    TruncSeries<T> r = TruncSeries<T>::monomial(s.var(), n, 1, T(1) / s[1]);
    for (int it = 0; it < 64; ++it) {
        TruncSeries<T> err = compose(s, r) - id;
        if (err.is_zero()) return r;
        r = r - err / compose(ds, r);
    }
    throw std::runtime_error("revert: Newton iteration failed to close");
}

template <class T>
T evaluate(const TruncSeries<T>& s, const T& x) {
    T r{};
    for (int i = s.order(); i >= 0; --i) r = r * x + s[i];
    return r;
}

}  // namespace mirrorq
