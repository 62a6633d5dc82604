#include "mirrorq/yukawa.hpp"

#include <stdexcept>
#include <string>

#include "mirrorq/logseries.hpp"

namespace mirrorq {

TruncSeries<> lambert_from_periods(const FrobeniusBasis& fb, const MirrorMap& mm) {
    LogSeries s = fb.psi(1) / fb.u[0];
    LogSeries r = fb.psi(2) / fb.u[0];
    LogSeries combo = r - Rational(1, 2) * (s * s);
    // Logs cancel identically; anything left is a transcription error.
    TruncSeries<> pure = combo.log_free_part();
    TruncSeries<> inq = Rational(5) * compose(pure, mm.z_of_q);
    TruncSeries<> c(Var::Q, inq.order());
    for (int n = 1; n <= inq.order(); ++n) c[n] = Rational((long)n * n) * inq[n];
    return c;
}

CubicIdentityResult cubic_identity_check(const FrobeniusBasis& fb, const MirrorMap& mm,
                                         const TruncSeries<>& lambert) {
    CubicIdentityResult res;
    res.report.suite = "yukawa";
    LogSeries s = fb.psi(1) / fb.u[0];
    LogSeries r = fb.psi(2) / fb.u[0];
    LogSeries r3 = fb.psi(3) / fb.u[0];
    LogSeries combo = Rational(1, 3) * (s * s * s) - s * r + r3;
    res.report.add("cubic combination is log-free", combo.is_log_free());
    if (!combo.is_log_free()) return res;
    TruncSeries<> inq = compose(combo.component(0), mm.z_of_q);
    int upto = std::min(inq.order(), lambert.order());
    // (+/-)(2/5) sum c_n q^n / n^3: one global sign, measured at n = 1 and
    // then required at every computed order.
    Rational lead = Rational(5, 2) * inq[1];
    if (lead == lambert[1])
        res.sign = 1;
    else if (-lead == lambert[1])
        res.sign = -1;
    res.report.add("cubic route proportionality sign determined", res.sign != 0,
                   std::to_string(res.sign));
    bool agree = res.sign != 0;
    std::string bad = "0";
    for (int n = 1; agree && n <= upto; ++n) {
        Rational got = Rational(res.sign) * Rational(5, 2) * Rational((long)n * n * n) * inq[n];
        if (got != lambert[n]) {
            agree = false;
            bad = "q^" + std::to_string(n);
        }
    }
    res.report.add("cubic-route c_n equal quadratic-route c_n", agree, agree ? "0" : bad);
    return res;
}

std::vector<mpz_class> extract_instantons(const TruncSeries<>& lambert, int max_degree) {
    if (max_degree < 1 || max_degree > lambert.order())
        throw std::invalid_argument("extract_instantons: degree out of range");
    std::vector<mpz_class> n(max_degree + 1);
    for (int d = 1; d <= max_degree; ++d) {
        Rational c = lambert[d];
        for (int e = 1; e < d; ++e)
            if (d % e == 0) c -= Rational(n[e]) * Rational((long)e * e * e);
        Rational nd = c / Rational((long)d * d * d);
        if (!nd.is_integer())
            throw std::runtime_error("extract_instantons: non-integral n_" + std::to_string(d) +
                                     " = " + nd.str() + " (upstream inconsistency)");
        n[d] = nd.num();
    }
    return n;
}

TruncSeries<> yukawa_bracket(const SeriesVector& sv) {
    const auto& h = sv.h;
    TruncSeries<> t05 = h[0] * h[0] * h[0] * h[0] * h[0];
    TruncSeries<> diff = h[4] - t05;
    return (Rational(390625) * (diff * diff)) / (h[5] * h[5] * h[5]);
}

KappaResult reconcile_normalization(const TruncSeries<>& bracket, const TruncSeries<>& lambert) {
    KappaResult kr;
    if (bracket[0].is_zero())
        throw std::domain_error("reconcile_normalization: bracket has zero constant term");
    kr.kappa = Rational(5) / bracket[0];
    int upto = std::min(bracket.order(), lambert.order());
    kr.proportional = true;
    for (int n = 0; n <= upto; ++n) {
        Rational target = (n == 0 ? Rational(5) : lambert[n]);
        if (kr.kappa * bracket[n] != target) {
            kr.proportional = false;
            kr.first_failure = n;
            break;
        }
    }
    return kr;
}

}  // namespace mirrorq
