#pragma once

#include <gmpxx.h>

#include <vector>

#include "mirrorq/frobenius.hpp"
#include "mirrorq/report.hpp"
#include "mirrorq/series_vector.hpp"

namespace mirrorq {

// Lambert-side coefficients c_n = sum_{d|n} n_d d^3, recovered from the
// log-free quadratic combination of Frobenius solutions. Returned as the
// q-series sum c_n q^n (zero constant term).
TruncSeries<> lambert_from_periods(const FrobeniusBasis& fb, const MirrorMap& mm);

// The cubic combination reproduces the same c_n up to one global sign,
// which is measured and reported (sign and per-order agreement).
struct CubicIdentityResult {
    CheckReport report;
    int sign = 0;  // measured proportionality sign
};
CubicIdentityResult cubic_identity_check(const FrobeniusBasis& fb, const MirrorMap& mm,
                                         const TruncSeries<>& lambert);

// Divisor-sum inversion n_d = (c_d - sum_{e|d, e<d} n_e e^3)/d^3; throws on
// a non-integral quotient (upstream bug, not a tolerance matter).
std::vector<mpz_class> extract_instantons(const TruncSeries<>& lambert, int max_degree);

// 5^8 (h4 - h0^5)^2 / h5^3 as an exact q-series.
TruncSeries<> yukawa_bracket(const SeriesVector& sv);

// Find the single rational kappa with kappa * bracket = 5 + sum c_n q^n at
// every order; kappa is reported, never assumed.
struct KappaResult {
    Rational kappa;
    bool proportional = false;
    int first_failure = -1;  // order of first mismatch when not proportional
};
KappaResult reconcile_normalization(const TruncSeries<>& bracket,
                                    const TruncSeries<>& lambert);

}  // namespace mirrorq
