#pragma once

#include <array>
#include <optional>

#include "mirrorq/series.hpp"

namespace mirrorq {

// The tuple of q-expansions h0..h6 (and, once derived, h7..h9). Both
// construction routes produce this shape; the dual-route check compares
// them coefficient for coefficient.
struct SeriesVector {
    int order;
    std::array<TruncSeries<>, 7> h;
    std::optional<std::array<TruncSeries<>, 3>> derived;  // h7, h8, h9

    // deg t_i and the scaling weights of the C*-action.
    static constexpr std::array<int, 7> degree{3, 6, 9, 12, 15, 11, 8};
    static constexpr std::array<int, 7> weight{1, 2, 3, 4, 5, 3, 2};
    static constexpr std::array<int, 3> degree_derived{5, 4, 1};

    static std::array<Rational, 7> initial_t0() {
        return {Rational(1, 5), Rational(-25), Rational(-35), Rational(-6),
                Rational(0),    Rational(-1),  Rational(-15)};
    }
    static std::array<Rational, 7> initial_t1() {
        return {Rational(24), Rational(-2250), Rational(-5350), Rational(-355),
                Rational(1),  Rational(1875),  Rational(4675)};
    }

    explicit SeriesVector(int n)
        : order(n), h{TruncSeries<>(Var::Q, n), TruncSeries<>(Var::Q, n),
                      TruncSeries<>(Var::Q, n), TruncSeries<>(Var::Q, n),
                      TruncSeries<>(Var::Q, n), TruncSeries<>(Var::Q, n),
                      TruncSeries<>(Var::Q, n)} {}
};

}  // namespace mirrorq
