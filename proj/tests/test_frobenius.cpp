#include <doctest.h>

#include <random>

#include "mirrorq/frobenius.hpp"
#include "mirrorq/logseries.hpp"

using namespace mirrorq;

namespace {

// (5m)!/(m!)^5 without factorial blowup in the test itself
Rational quintic_binomial(int m) {
    Rational r(1);
    for (int k = 1; k <= 5 * m; ++k) r *= Rational(k);
    Rational f(1);
    for (int k = 1; k <= m; ++k) f *= Rational(k);
    return r / pow(f, 5);
}

LogSeries random_logseries(std::mt19937& gen, int order, int logdeg = 3) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 5);
    LogSeries s(order);
    for (int k = 0; k <= logdeg; ++k)
        for (int i = 0; i <= order; ++i) s.component(k)[i] = Rational(num(gen), den(gen));
    return s;
}

}  // namespace

TEST_CASE("pochhammer with eps") {
    auto p1 = pochhammer_eps(Rational(1), 1, 3);
    CHECK(p1[0] == Rational(1));
    CHECK(p1[1] == Rational(1));
    CHECK(p1[2] == Rational(0));

    auto p0 = pochhammer_eps(Rational(1), 0, 3);
    CHECK(p0 == TruncSeries<>::constant(Var::Eps, 3, Rational(1)));

    auto p2 = pochhammer_eps(Rational(1), 2, 2);
    CHECK(p2[0] == Rational(2));
    CHECK(p2[1] == Rational(3));
    CHECK(p2[2] == Rational(1));

    CHECK_THROWS_AS(pochhammer_eps(Rational(1), 1, 4), std::invalid_argument);
}

TEST_CASE("frobenius components") {
    FrobeniusBasis fb = frobenius_components(12);
    CHECK(fb.u[0][0] == Rational(1));
    CHECK(fb.u[0][1] == Rational(120));
    CHECK(fb.u[0][2] == Rational(113400));
    CHECK(fb.u[1][0] == Rational(0));
    CHECK(fb.u[1][1] == Rational(770));
    CHECK(fb.u[2][0] == Rational(0));
    CHECK(fb.u[3][0] == Rational(0));
    for (int m = 0; m <= 12; ++m) CHECK(fb.u[0][m] == quintic_binomial(m));
}

TEST_CASE("u1 equals the harmonic-sum series at every order") {
    const int order = 100;
    FrobeniusBasis fb = frobenius_components(order);
    for (int m = 1; m <= order; ++m) {
        Rational h(0);
        for (int k = m + 1; k <= 5 * m; ++k) h += Rational(1, k);
        CHECK(fb.u[1][m] == Rational(5) * quintic_binomial(m) * h);
    }
}

TEST_CASE("log-series theta is a derivation; L algebra") {
    const int order = 10;
    // theta L = 1
    LogSeries L(order);
    L.component(1) = TruncSeries<>::constant(Var::Ztilde, order, Rational(1));
    LogSeries tL = theta(L);
    CHECK(tL.is_log_free());
    CHECK(tL.component(0)[0] == Rational(1));

    // theta L^2 = 2L
    LogSeries L2(order);
    L2.component(2) = TruncSeries<>::constant(Var::Ztilde, order, Rational(1));
    LogSeries tL2 = theta(L2);
    CHECK(tL2.component(1)[0] == Rational(2));
    CHECK(tL2.component(0).is_zero());

    // L * L = L^2
    CHECK(L * L == L2);

    // overflow beyond log-degree 3
    LogSeries L3(order);
    L3.component(3) = TruncSeries<>::constant(Var::Ztilde, order, Rational(1));
    CHECK_THROWS_AS(L * L3, std::domain_error);

    std::mt19937 gen(17);
    for (int it = 0; it < 20; ++it) {
        LogSeries a = random_logseries(gen, 8, 1);
        LogSeries b = random_logseries(gen, 8, 1);
        CHECK(theta(a * b) == theta(a) * b + a * theta(b));
    }
}

TEST_CASE("picard-fuchs operator") {
    const int order = 60;
    FrobeniusBasis fb = frobenius_components(order);
    for (int j = 0; j < 4; ++j) {
        LogSeries r = picard_fuchs_apply(fb.psi(j));
        CHECK(r.is_zero());
    }

    LogSeries one = LogSeries::from_series(TruncSeries<>::constant(Var::Ztilde, order, Rational(1)));
    LogSeries r = picard_fuchs_apply(one);
    CHECK(r.is_log_free());
    CHECK(r.component(0)[0] == Rational(0));
    CHECK(r.component(0)[1] == Rational(-120));
    CHECK(r.component(0).top_nonzero() == 1);

    LogSeries z(order);
    CHECK(picard_fuchs_apply(z).is_zero());
}

TEST_CASE("picard-fuchs rewrite agrees with the factored form in z") {
    // theta^4 - z prod(theta + a/5) with z = 5^5 ztilde, applied factor by factor.
    const int order = 12;
    std::mt19937 gen(23);
    for (int it = 0; it < 10; ++it) {
        LogSeries s = random_logseries(gen, order);
        LogSeries t1 = theta(s), t2 = theta(t1), t3 = theta(t2), t4 = theta(t3);
        LogSeries acc = s;
        for (long a = 1; a <= 4; ++a) {
            LogSeries shifted = theta(acc) + Rational(a, 5) * acc;
            acc = shifted;
        }
        LogSeries zterm = Rational(3125) * shift_up(acc, 1);
        CHECK(picard_fuchs_apply(s) == t4 - zterm);
    }
}

TEST_CASE("mirror map") {
    MirrorMap mm = mirror_map(10);
    CHECK(mm.q_of_z[0] == Rational(0));
    CHECK(mm.q_of_z[1] == Rational(1));
    CHECK(mm.q_of_z[2] == Rational(770));
    CHECK(mm.z_of_q[1] == Rational(1));
    CHECK(mm.z_of_q[2] == Rational(-770));
    CHECK(mm.z_of_q[3] == Rational(171525));
    CHECK(compose(retagged(mm.q_of_z, Var::Q), retagged(mm.z_of_q, Var::Q)) ==
          TruncSeries<>::monomial(Var::Q, 10, 1));
    CHECK_THROWS_AS(mirror_map(1), std::invalid_argument);
}

TEST_CASE("period-route series: log cancellation and low-order table columns") {
    SeriesVector sv = h_series_from_periods(6);
    auto T0 = SeriesVector::initial_t0();
    auto T1 = SeriesVector::initial_t1();
    for (int i = 0; i < 7; ++i) {
        CHECK(sv.h[i][0] == T0[i]);
        CHECK(sv.h[i][1] == T1[i]);
    }
    CHECK(sv.h[0][2] == Rational(4200));
    CHECK(sv.h[4][2] == Rational(-170));
    CHECK(sv.h[4][3] == Rational(-41475));
}

TEST_CASE("wronskian combinations are log-free at every order") {
    const int order = 25;
    FrobeniusBasis fb = frobenius_components(order);
    std::array<LogSeries, 3> x1{LogSeries(order), LogSeries(order), LogSeries(order)};
    std::array<LogSeries, 3> x2{LogSeries(order), LogSeries(order), LogSeries(order)};
    x2[0] = Rational(1, 5) * fb.psi(0);
    x1[0] = Rational(1, 25) * fb.psi(1);
    for (int j = 1; j < 3; ++j) {
        x2[j] = theta(x2[j - 1]);
        x1[j] = theta(x1[j - 1]);
    }
    CHECK((x1[1] * x2[0] - x1[0] * x2[1]).is_log_free());
    CHECK((x1[2] * x2[0] - x1[0] * x2[2]).is_log_free());
}
