#pragma once

#include <array>
#include <stdexcept>

#include "mirrorq/series.hpp"

namespace mirrorq {

// f0 + L f1 + L^2 f2 + L^3 f3 with L = ln(ztilde) and f_k truncated series
// in ztilde. Log-degree 3 is all the Frobenius basis needs; any operation
// that would truncate in L throws instead.
class LogSeries {
public:
    explicit LogSeries(int order)
        : f_{TruncSeries<>(Var::Ztilde, order), TruncSeries<>(Var::Ztilde, order),
             TruncSeries<>(Var::Ztilde, order), TruncSeries<>(Var::Ztilde, order)} {}

    static LogSeries from_series(const TruncSeries<>& s) {
        if (s.var() != Var::Ztilde)
            throw std::invalid_argument("LogSeries: component must be a ztilde series");
        LogSeries r(s.order());
        r.f_[0] = s;
        return r;
    }

    int order() const { return f_[0].order(); }
    const TruncSeries<>& component(int k) const { return f_.at(k); }
    TruncSeries<>& component(int k) { return f_.at(k); }

    bool is_log_free() const {
        return f_[1].is_zero() && f_[2].is_zero() && f_[3].is_zero();
    }
    bool is_zero() const { return f_[0].is_zero() && is_log_free(); }

    // The pure power-series part; throws if log components survive, which
    // in every caller signals a transcription error upstream.
    const TruncSeries<>& log_free_part() const {
        if (!is_log_free())
            throw std::domain_error("LogSeries: residual log components");
        return f_[0];
    }

    friend bool operator==(const LogSeries& a, const LogSeries& b) { return a.f_ == b.f_; }

private:
    std::array<TruncSeries<>, 4> f_;
};

inline LogSeries operator+(const LogSeries& a, const LogSeries& b) {
    LogSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k < 4; ++k) r.component(k) = a.component(k) + b.component(k);
    return r;
}

inline LogSeries operator-(const LogSeries& a, const LogSeries& b) {
    LogSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k < 4; ++k) r.component(k) = a.component(k) - b.component(k);
    return r;
}

inline LogSeries operator*(const Rational& c, const LogSeries& a) {
    LogSeries r(a.order());
    for (int k = 0; k < 4; ++k) r.component(k) = c * a.component(k);
    return r;
}

inline LogSeries operator*(long c, const LogSeries& a) { return Rational(c) * a; }

inline LogSeries operator*(const LogSeries& a, const LogSeries& b) {
    LogSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i < 4; ++i) {
        if (a.component(i).is_zero()) continue;
        for (int j = 0; j < 4; ++j) {
            if (b.component(j).is_zero()) continue;
            TruncSeries<> p = a.component(i) * b.component(j);
            if (i + j > 3) {
                if (!p.is_zero())
                    throw std::domain_error("LogSeries: product exceeds log-degree 3");
                continue;
            }
            r.component(i + j) = r.component(i + j) + p;
        }
    }
    return r;
}

// Divide by a log-free unit series (componentwise).
inline LogSeries operator/(const LogSeries& a, const TruncSeries<>& b) {
    LogSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k < 4; ++k) r.component(k) = a.component(k) / b;
    return r;
}

// theta(L^k f) = k L^{k-1} f + L^k theta(f), since theta L = 1.
inline LogSeries theta(const LogSeries& a) {
    LogSeries r(a.order());
    for (int k = 0; k < 4; ++k) {
        r.component(k) = theta(a.component(k));
        if (k < 3)
            r.component(k) = r.component(k) + Rational(k + 1) * a.component(k + 1);
    }
    return r;
}

inline LogSeries shift_up(const LogSeries& a, int k) {
    LogSeries r(a.order());
    for (int i = 0; i < 4; ++i) r.component(i) = shift_up(a.component(i), k);
    return r;
}

}  // namespace mirrorq
