#pragma once

#include <array>

#include "mirrorq/logseries.hpp"
#include "mirrorq/series.hpp"
#include "mirrorq/series_vector.hpp"

namespace mirrorq {

// Frobenius solutions of the quintic Picard-Fuchs operator at ztilde = 0,
// stored through their log-graded components: psi_j = sum_k (L^k/k!) u_{j-k}
// with u_0(0) = 1 and u_1, u_2, u_3 vanishing at 0.
struct FrobeniusBasis {
    int order;
    std::array<TruncSeries<>, 4> u;

    LogSeries psi(int j) const;
};

// (c + eps)_n expanded mod eps^{deg+1}, deg <= 3.
TruncSeries<> pochhammer_eps(const Rational& c, long n, int deg);

FrobeniusBasis frobenius_components(int order);

// theta^4 - 5*ztilde*(5 theta + 1)(5 theta + 2)(5 theta + 3)(5 theta + 4),
// the operator rewritten in ztilde = z/5^5.
LogSeries picard_fuchs_apply(const LogSeries& s);

// q(ztilde) = ztilde * exp(u1/u0) and its compositional inverse.
struct MirrorMap {
    TruncSeries<> q_of_z;  // series in ztilde
    TruncSeries<> z_of_q;  // series in q
};

MirrorMap mirror_map(const FrobeniusBasis& fb);
MirrorMap mirror_map(int order);

// The period route: assemble the closed-form t-polynomials from the
// normalized log-series solutions, check that every log component cancels,
// and compose with the inverse mirror map. Equals the recursion route
// coefficient for coefficient.
SeriesVector h_series_from_periods(int order);
SeriesVector h_series_from_periods(const FrobeniusBasis& fb, const MirrorMap& mm);

}  // namespace mirrorq
