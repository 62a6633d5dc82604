#include "mirrorq/frobenius.hpp"

#include <stdexcept>

namespace mirrorq {

LogSeries FrobeniusBasis::psi(int j) const {
    if (j < 0 || j > 3) throw std::invalid_argument("psi: index out of range");
    static const long fact[4] = {1, 1, 2, 6};
    LogSeries r(order);
    for (int k = 0; k <= j; ++k)
        r.component(k) = Rational(1, fact[k]) * u[j - k];
    return r;
}

TruncSeries<> pochhammer_eps(const Rational& c, long n, int deg) {
    if (deg < 0 || deg > 3) throw std::invalid_argument("pochhammer_eps: deg must be 0..3");
    TruncSeries<> r = TruncSeries<>::constant(Var::Eps, deg, Rational(1));
    for (long k = 0; k < n; ++k) {
        TruncSeries<> f = TruncSeries<>::constant(Var::Eps, deg, c + Rational(k));
        if (deg >= 1) f[1] = Rational(1);
        r = r * f;
    }
    return r;
}

FrobeniusBasis frobenius_components(int order) {
    if (order < 1) throw std::invalid_argument("frobenius_components: order must be >= 1");
    FrobeniusBasis fb{order,
                      {TruncSeries<>(Var::Ztilde, order), TruncSeries<>(Var::Ztilde, order),
                       TruncSeries<>(Var::Ztilde, order), TruncSeries<>(Var::Ztilde, order)}};
    // b_m(eps) = 5^{5m} prod_a (a/5 + eps)_m / (1 + eps)_m^4, built up one
    // factor ratio at a time, all mod eps^4.
    TruncSeries<> b = TruncSeries<>::constant(Var::Eps, 3, Rational(1));
    fb.u[0][0] = Rational(1);
    for (int m = 1; m <= order; ++m) {
        for (long a = 1; a <= 4; ++a) {
            TruncSeries<> f = TruncSeries<>::constant(Var::Eps, 3, Rational(a, 5) + Rational(m - 1));
            f[1] = Rational(1);
            b = b * f;
        }
        b = Rational(3125) * b;
        TruncSeries<> den = TruncSeries<>::constant(Var::Eps, 3, Rational(m));
        den[1] = Rational(1);
        TruncSeries<> den2 = den * den;
        b = b / (den2 * den2);
        for (int j = 0; j < 4; ++j) fb.u[j][m] = b[j];
    }
    return fb;
}

LogSeries picard_fuchs_apply(const LogSeries& s) {
    LogSeries t1 = theta(s);
    LogSeries t2 = theta(t1);
    LogSeries t3 = theta(t2);
    LogSeries t4 = theta(t3);
    LogSeries bracket = 625 * t4 + 1250 * t3 + 875 * t2 + 250 * t1 + 24 * s;
    return t4 - 5 * shift_up(bracket, 1);
}

MirrorMap mirror_map(const FrobeniusBasis& fb) {
    if (fb.order < 2) throw std::invalid_argument("mirror_map: order must be >= 2");
    TruncSeries<> ratio = fb.u[1] / fb.u[0];
    TruncSeries<> q_of_z = shift_up(exp_series(ratio), 1);
    TruncSeries<> z_of_q = retagged(revert(q_of_z), Var::Q);
    return {q_of_z, z_of_q};
}

MirrorMap mirror_map(int order) { return mirror_map(frobenius_components(order)); }

SeriesVector h_series_from_periods(const FrobeniusBasis& fb, const MirrorMap& mm) {
    const int n = fb.order;
    // Normalized solution columns with the (2 pi i / 5)-powers stripped:
    // row 2 carries psi0/5 and its theta-derivatives, row 1 carries psi1/25.
    std::array<LogSeries, 4> x2{LogSeries(n), LogSeries(n), LogSeries(n), LogSeries(n)};
    std::array<LogSeries, 3> x1{LogSeries(n), LogSeries(n), LogSeries(n)};
    x2[0] = Rational(1, 5) * fb.psi(0);
    for (int j = 1; j < 4; ++j) x2[j] = theta(x2[j - 1]);
    x1[0] = Rational(1, 25) * fb.psi(1);
    for (int j = 1; j < 3; ++j) x1[j] = theta(x1[j - 1]);

    LogSeries one = LogSeries::from_series(TruncSeries<>::constant(Var::Ztilde, n, Rational(1)));
    LogSeries z = LogSeries::from_series(TruncSeries<>::monomial(Var::Ztilde, n, 1, Rational(3125)));
    LogSeries zm1 = z - one;

    LogSeries wr12 = x1[1] * x2[0] - x1[0] * x2[1];
    LogSeries wr13 = x1[2] * x2[0] - x1[0] * x2[2];

    std::array<LogSeries, 7> H{LogSeries(n), LogSeries(n), LogSeries(n), LogSeries(n),
                               LogSeries(n), LogSeries(n), LogSeries(n)};
    H[0] = x2[0];
    H[1] = 625 * (x2[0] * ((6 * z - one) * x2[0] + 5 * ((11 * z - one) * x2[1]) +
                           25 * ((6 * z - one) * x2[2]) + 125 * (zm1 * x2[3])));
    H[2] = 625 * (x2[0] * x2[0] *
                  ((2 * z - 7 * one) * x2[0] + 15 * (zm1 * x2[1]) + 25 * (zm1 * x2[2])));
    H[3] = 625 * (x2[0] * x2[0] * x2[0] * ((z - 6 * one) * x2[0] + 5 * (zm1 * x2[1])));
    H[4] = z * (x2[0] * x2[0]) * (x2[0] * x2[0]) * x2[0];
    H[5] = 3125 * (zm1 * (x2[0] * x2[0]) * wr12);
    H[6] = 3125 * (zm1 * x2[0] * (3 * wr12 + 5 * wr13));

    SeriesVector sv(std::min(n, mm.z_of_q.order()));
    for (int i = 0; i < 7; ++i) {
        // Any surviving log term would flag a transcription error.
        const TruncSeries<>& pure = H[i].log_free_part();
        sv.h[i] = compose(pure, mm.z_of_q);
    }
    return sv;
}

SeriesVector h_series_from_periods(int order) {
    FrobeniusBasis fb = frobenius_components(order);
    return h_series_from_periods(fb, mirror_map(fb));
}

}  // namespace mirrorq
