#pragma once

#include <array>

#include "mirrorq/eigen_support.hpp"
#include "mirrorq/report.hpp"
#include "mirrorq/series_vector.hpp"

namespace mirrorq {

// Numerators P_i = t5 * R_i of the degree-increasing vector field, as
// polynomials over any commutative ring with integer scalar action.
// All terms are integer multiples of monomials, so a ring with +, * and
// long-scalar multiplication suffices.
template <class Ring>
std::array<Ring, 7> vf_numerators(const std::array<Ring, 7>& t) {
    const Ring &t0 = t[0], &t1 = t[1], &t2 = t[2], &t3 = t[3], &t4 = t[4], &t5 = t[5],
               &t6 = t[6];
    const long p4 = 625, p5 = 3125, p6 = 15625, p8 = 390625, p9 = 1953125;
    const long p10 = 9765625;
    Ring t02 = t0 * t0;
    Ring t03 = t02 * t0;
    Ring t04 = t02 * t02;
    Ring t05 = t04 * t0;
    std::array<Ring, 7> p = {
        6 * p4 * t05 + t0 * t3 - p4 * t4,
        -(p8 * (t05 * t0)) + p5 * (t04 * t1) + p8 * (t0 * t4) + t1 * t3,
        -(3 * p9 * (t05 * t02)) - p4 * (t05 * t1) + 2 * p5 * (t04 * t2) +
            3 * p9 * (t02 * t4) + p4 * (t1 * t4) + 2 * (t2 * t3),
        -(p10 * (t05 * t03)) - p4 * (t05 * t2) + 3 * p5 * (t04 * t3) + p10 * (t03 * t4) +
            p4 * (t2 * t4) + 3 * (t3 * t3),
        p6 * (t04 * t4) + 5 * (t3 * t4),
        -(p4 * (t05 * t6)) + 3 * p5 * (t04 * t5) + 2 * (t3 * t5) + p4 * (t4 * t6),
        3 * p5 * (t04 * t6) - p5 * (t03 * t5) - 2 * (t2 * t5) + 3 * (t3 * t6)};
    return p;
}

// Closed-form Jacobian of the numerators (hand partials; the dual-number
// route in the tests must reproduce it entry for entry).
Mat7q vf_jacobian(const std::array<Rational, 7>& t);

// Jacobian evaluated at the constant-term tuple.
Mat7q jacobian_A0();

// q-expansion of h0..h6 by the order-by-order linear solve against
// (A0 + 5n I); aborts loudly if any step is singular.
SeriesVector expand(int order);

// h7, h8, h9 from the closed forms in h0..h6.
std::array<TruncSeries<>, 3> derived_t789(const SeriesVector& sv);
SeriesVector with_derived(SeriesVector sv);

// The ten-equation first-order system in the extended variables, checked
// coefficient-wise at orders 0..N-1.
CheckReport verify_lovely1(const SeriesVector& sv);

// The four relations tying h7..h10 to h0..h6.
CheckReport verify_modulispace_relations(const SeriesVector& sv);

}  // namespace mirrorq
