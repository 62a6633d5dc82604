#include <doctest.h>

#include <random>

#include "mirrorq/frobenius.hpp"
#include "mirrorq/periods.hpp"

using namespace mirrorq;

namespace {

const char* kZeta3Digits = "1.2020569031595942853997381615114499907649862923404";
const char* kPiDigits = "3.1415926535897932384626433832795028841971693993751";

// |a - b| < 2^e
bool close2(const BigFloat& a, const BigFloat& b, long e) {
    return abs(a - b) < BigFloat::pow2(e, a.prec());
}

Mat4q special_form(const Rational& t0, const Rational& t1, const Rational& t2,
                   const Rational& t3) {
    Mat4q m;
    m << t0, Rational(1), Rational(0), Rational(0),
        Rational(1), Rational(0), Rational(0), Rational(0),
        t1, t3, Rational(1), Rational(0),
        t2, -t0 * t3 + t1, -t0, Rational(1);
    return m;
}

}  // namespace

TEST_CASE("zeta(3) and pi against stored reference digits") {
    // 50 digits ~ 166 bits; compare at that scale
    BigFloat z = zeta3(256);
    BigFloat p = pi_value(256);
    BigFloat zref = BigFloat::from_string(kZeta3Digits, 256);
    BigFloat pref = BigFloat::from_string(kPiDigits, 256);
    CHECK(close2(z, zref, -160));
    CHECK(close2(p, pref, -160));

    // consistency across precisions
    CHECK(close2(zeta3(128), zeta3(256), -126));
    CHECK(close2(pi_value(128), pi_value(256), -126));
    CHECK_THROWS_AS(zeta3(32), std::invalid_argument);
}

TEST_CASE("assembly constants") {
    CHECK(PeriodAssembly::b() == Rational(25, 12));
    CHECK(PeriodAssembly::d() == Rational(5));
    CHECK(PeriodAssembly::k() == Rational(5));
    // a = -200 zeta(3)/(2 pi i)^3 is purely imaginary: -200 z / (-8 pi^3 i)
    BigComplex a = PeriodAssembly::a(192);
    CHECK(abs(a.re) < BigFloat::pow2(-180, 192));
    CHECK(a.im.sign() < 0);
}

TEST_CASE("quadratic relations vanish identically on the special form") {
    // degree <= 2 in each variable, so a 3-point grid per variable proves it
    const Rational grid[3] = {Rational(-1), Rational(1, 2), Rational(2)};
    for (const auto& a : grid)
        for (const auto& b : grid)
            for (const auto& c : grid)
                for (const auto& d : grid) {
                    auto qr = quadratic_relations_residual(special_form(a, b, c, d));
                    for (const auto& f : qr.f) CHECK(f == Rational(0));
                    CHECK(qr.det == Rational(-1));
                }
}

TEST_CASE("quadratic relations: negative controls") {
    Mat4q id;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) id(i, j) = Rational(i == j ? 1 : 0);
    auto qi = quadratic_relations_residual(id);
    CHECK(qi.f[2] == Rational(1));  // f14 on the identity

    std::mt19937 gen(77);
    std::uniform_int_distribution<long> num(-5, 5);
    Mat4q r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = Rational(num(gen), 1);
    auto qr = quadratic_relations_residual(r);
    bool some_nonzero = false;
    for (const auto& f : qr.f) some_nonzero = some_nonzero || !f.is_zero();
    CHECK(some_nonzero);
}

TEST_CASE("period matrix at 128 bits satisfies the normalized invariants") {
    PeriodMatrix pm = assemble_period_matrix(Rational(1, 10), 128);
    BigFloat tol = BigFloat::pow2(-64, 192);

    auto qr = quadratic_relations_residual(pm.m);
    for (const auto& f : qr.f) CHECK(abs(f) < tol);
    CHECK(abs(qr.det + BigComplex(1)) < tol);

    // the raw derivative-column matrix does not satisfy them (O(1) residual)
    auto qraw = quadratic_relations_residual(pm.raw);
    BigFloat big(192);
    for (const auto& f : qraw.f)
        if (big < abs(f)) big = abs(f);
    CHECK(big > BigFloat::from_rational(Rational(1, 2), 192));
}

TEST_CASE("theta-derivative column against a finite difference") {
    const mpfr_prec_t wp = 256;
    FrobeniusBasis fb = frobenius_components(70);
    BigFloat zt = BigFloat::from_rational(Rational(1, 10) / Rational(3125), wp);
    BigFloat h = BigFloat::pow2(-40, wp);
    BigFloat up = zt * exp(h), dn = zt * exp(-h);
    auto [fu, tu] = evaluate_with_tail(fb.u[0], up);
    auto [fd, td] = evaluate_with_tail(fb.u[0], dn);
    BigFloat fdiff = (fu - fd) / (BigFloat::from_long(2, wp) * h);
    auto [ft, tt] = evaluate_with_tail(theta(fb.u[0]), zt);
    CHECK(abs(fdiff - ft) < BigFloat::pow2(-70, wp));
}

TEST_CASE("reduction of an exact special-form matrix is the identity") {
    Mat4q m = special_form(Rational(2, 3), Rational(-1, 2), Rational(5, 7), Rational(3));
    Mat4c mc;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) mc(i, j) = BigComplex::from_rational(m(i, j), 192);
    ReductionResult rr = reduce_to_special_form(mc, BigFloat::pow2(-64, 192));
    BigFloat tol = BigFloat::pow2(-120, 192);
    CHECK(abs(rr.g[0] - BigComplex(1)) < tol);
    CHECK(abs(rr.g[1] - BigComplex(1)) < tol);
    for (int k = 2; k < 6; ++k) CHECK(abs(rr.g[k]) < tol);
    CHECK(abs(rr.tau.tau0 - BigComplex::from_rational(Rational(2, 3), 192)) < tol);
}

TEST_CASE("reduction preconditions and pattern enforcement") {
    Mat4c zero;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) zero(i, j) = BigComplex();
    CHECK_THROWS_AS(reduce_to_special_form(zero, BigFloat::pow2(-10, 64)), std::domain_error);

    // an invertible matrix violating the relations fails the pattern check
    Mat4c bad;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            bad(i, j) = BigComplex(i == j ? 2 : (i + 2 * j) % 3);
    CHECK_THROWS_AS(reduce_to_special_form(bad, BigFloat::pow2(-40, 128)), std::domain_error);
}

TEST_CASE("tau0 from the reduction equals the period ratio") {
    PeriodMatrix pm = assemble_period_matrix(Rational(1, 10), 128);
    ReductionResult rr = reduce_to_special_form(pm.m, BigFloat::pow2(-64, 192));
    BigComplex ratio = pm.raw(0, 0) / pm.raw(1, 0);
    CHECK(abs(rr.tau.tau0 - ratio) < BigFloat::pow2(-120, 192));
    // purely imaginary at a real sample point, with positive imaginary part
    CHECK(abs(rr.tau.tau0.re) < BigFloat::pow2(-120, 192));
    CHECK(rr.tau.tau0.im.sign() > 0);
}

TEST_CASE("cocycle checks pass at 128 bits") {
    PeriodMatrix pm = assemble_period_matrix(Rational(1, 10), 128);
    CheckReport rep = m1_cocycle_check(pm);
    CHECK(rep.all_pass());
}

TEST_CASE("frame-normalized periods drive the moduli-point identity") {
    // t(w) from the closed forms equals (1,0,0,0,z,1,0) acted on by the
    // reduction factor of the frame matrix (no comparison rescale there).
    PeriodMatrix pm = assemble_period_matrix(Rational(1, 10), 160);
    ReductionResult fr =
        reduce_to_special_form(pm.frame, BigFloat::pow2(-60, 224), /*assert_pattern=*/false);
    std::array<BigComplex, 7> zt = {BigComplex(1), BigComplex(0), BigComplex(0), BigComplex(0),
                                    BigComplex::from_rational(Rational(1, 10), 224),
                                    BigComplex(1), BigComplex(0)};
    std::array<BigComplex, 7> expect = t_values_at_point(pm);
    std::array<BigComplex, 7> got = action_on_t(zt, fr.g);
    for (int i = 0; i < 7; ++i) CHECK(abs(got[i] - expect[i]) < BigFloat::pow2(-120, 224));
}

TEST_CASE("insufficient series order is an error") {
    CHECK_THROWS_AS(assemble_period_matrix(Rational(1, 10), 128, 10), std::runtime_error);
    CHECK_THROWS_AS(assemble_period_matrix(Rational(2), 128), std::domain_error);
    CHECK_THROWS_AS(assemble_period_matrix(Rational(1, 10), 32), std::invalid_argument);
}
