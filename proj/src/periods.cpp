#include "mirrorq/periods.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mirrorq/logseries.hpp"

namespace mirrorq {

BigFloat zeta3(mpfr_prec_t prec) {
    if (prec < 64) throw std::invalid_argument("zeta3: precision must be >= 64 bits");
    return BigFloat::zeta3(prec);
}

BigFloat pi_value(mpfr_prec_t prec) {
    if (prec < 64) throw std::invalid_argument("pi: precision must be >= 64 bits");
    return BigFloat::pi(prec);
}

BigComplex PeriodAssembly::a(mpfr_prec_t prec) {
    BigComplex twopii =
        BigComplex(BigFloat(prec), BigFloat::from_long(2, prec) * BigFloat::pi(prec));
    BigComplex num = BigComplex::from_real(BigFloat::from_long(-200, prec) * BigFloat::zeta3(prec));
    return num / pow_int(twopii, 3, prec);
}

namespace {

struct LogEval {
    BigFloat value;
    BigFloat tail;
};

LogEval eval_logseries(const LogSeries& s, const BigFloat& zt, const BigFloat& logzt) {
    mpfr_prec_t p = zt.prec();
    BigFloat acc(p), tail(p);
    BigFloat lp = BigFloat::from_long(1, p);
    for (int k = 0; k < 4; ++k) {
        auto [v, t] = evaluate_with_tail(s.component(k), zt);
        acc = acc + lp * v;
        if (tail < t) tail = t;
        lp = lp * logzt;
    }
    return {acc, tail};
}

Eigen::Matrix<Rational, 4, 4> st_transpose(const Rational& z) {
    Eigen::Matrix<Rational, 4, 4> S, T;
    Rational zm1 = z - Rational(1);
    S << Rational(1), Rational(0), Rational(0), Rational(0),
        Rational(-3125), Rational(-625) * zm1, Rational(0), Rational(0),
        Rational(-5) / zm1, Rational(0), Rational(1), Rational(0),
        Rational(0), Rational(0), Rational(0), Rational(625) * zm1;
    T << Rational(1), Rational(0), Rational(0), Rational(0),
        Rational(-1), Rational(-5), Rational(0), Rational(0),
        Rational(2), Rational(15), Rational(25), Rational(0),
        Rational(-6), Rational(-55), Rational(-150), Rational(-125);
    Eigen::Matrix<Rational, 4, 4> st = S * T;
    return st.transpose();
}

}  // namespace

PeriodMatrix assemble_period_matrix(const Rational& z0, mpfr_prec_t prec, int order) {
    if (!(z0 > Rational(0) && z0 < Rational(1)))
        throw std::domain_error("assemble_period_matrix: sample point must lie in (0,1)");
    if (prec < 64) throw std::invalid_argument("assemble_period_matrix: prec must be >= 64");
    const mpfr_prec_t wp = prec + 64;

    if (order <= 0) {
        // Ratio test: terms decay like z0^n up to slowly varying factors.
        double bits_per_term = -std::log2(z0.num().get_d() / z0.den().get_d());
        order = (int)std::ceil((double)(prec + 40) / bits_per_term) + 24;
    }
    FrobeniusBasis fb = frobenius_components(order);

    Rational zt_exact = z0 / Rational(3125);
    BigFloat zt = BigFloat::from_rational(zt_exact, wp);
    BigFloat logzt = log(zt);

    // theta^m psi_j values, m = 0..3.
    BigFloat psival[4][4];
    BigFloat max_tail(wp);
    BigFloat bound = BigFloat::pow2(-(long)prec - 20, wp);
    for (int j = 0; j < 4; ++j) {
        LogSeries cur = fb.psi(j);
        for (int m = 0; m < 4; ++m) {
            LogEval ev = eval_logseries(cur, zt, logzt);
            psival[j][m] = ev.value;
            if (max_tail < ev.tail) max_tail = ev.tail;
            if (!(ev.tail < bound))
                throw std::runtime_error(
                    "assemble_period_matrix: series order insufficient for requested "
                    "precision (last term " +
                    ev.tail.str(6) + " vs bound " + bound.str(6) + ")");
            if (m < 3) cur = theta(cur);
        }
    }

    auto real = [&](const BigFloat& v) { return BigComplex::from_real(v); };
    auto rc = [&](const Rational& q) { return BigComplex::from_rational(q, wp); };
    BigComplex i_unit = BigComplex::i_unit(wp);
    BigComplex twopii = real(BigFloat::from_long(2, wp) * BigFloat::pi(wp)) * i_unit;
    BigComplex c = twopii / rc(Rational(5));
    BigComplex c2 = c * c, c3 = c2 * c;
    BigComplex aconst = PeriodAssembly::a(wp);
    Rational b = PeriodAssembly::b(), d = PeriodAssembly::d();

    PeriodMatrix pm;
    pm.z0 = z0;
    pm.prec_bits = prec;
    pm.series_order = order;
    pm.tail_bound = max_tail.str(8);

    // x_{i1} in terms of psi-values, then x_{ij} = theta^{j-1} x_{i1}.
    for (int m = 0; m < 4; ++m) {
        BigComplex p0 = real(psival[0][m]);
        BigComplex p1 = real(psival[1][m]);
        BigComplex p2 = real(psival[2][m]);
        BigComplex p3 = real(psival[3][m]);
        pm.raw(0, m) = rc(Rational(1, 25)) * c2 * p1;
        pm.raw(1, m) = rc(Rational(1, 5)) * c3 * p0;
        pm.raw(2, m) = rc(d / Rational(125)) * c * p2 + rc(d / Rational(50)) * c2 * p1 -
                       rc(b / Rational(5)) * c3 * p0;
        pm.raw(3, m) = rc(-d / Rational(625)) * p3 - rc(b / Rational(25)) * c2 * p1 -
                       rc(Rational(1, 5)) * aconst * c3 * p0;
    }

    Eigen::Matrix<Rational, 4, 4> st_t = st_transpose(z0);
    Mat4c st_c;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) st_c(i, j) = rc(st_t(i, j));
    pm.frame = pm.raw * st_c;

    // Betti/de-Rham comparison: the last two frame columns carry -(2 pi i)^3.
    BigComplex colscale = rc(Rational(-1)) / pow_int(twopii, 3, wp);
    pm.m = pm.frame;
    for (int i = 0; i < 4; ++i) {
        pm.m(i, 2) = pm.m(i, 2) * colscale;
        pm.m(i, 3) = pm.m(i, 3) * colscale;
    }
    return pm;
}

ReductionResult reduce_to_special_form(const Mat4c& x, const BigFloat& tol, bool assert_pattern) {
    const BigComplex &x11 = x(0, 0), &x12 = x(0, 1), &x13 = x(0, 2);
    const BigComplex &x21 = x(1, 0), &x22 = x(1, 1), &x23 = x(1, 2), &x24 = x(1, 3);
    BigComplex det2 = x11 * x22 - x12 * x21;
    if (!(abs(x21) > tol) || !(abs(det2) > tol))
        throw std::domain_error("reduce_to_special_form: x21 or x11 x22 - x12 x21 too close to 0");

    BigComplex one = BigComplex::from_real(BigFloat::from_long(1, tol.prec()));
    std::array<BigComplex, 6> ginv = {
        one / x21,
        -x21 / det2,
        -x22 / x21,
        (-(x12 * x23) + x13 * x22) / det2,
        (x11 * x22 * x24 - x12 * x21 * x24 + x12 * x22 * x23 - x13 * (x22 * x22)) /
            (x11 * x21 * x22 - x12 * (x21 * x21)),
        (x11 * x23 - x13 * x21) / det2};

    ReductionResult rr;
    rr.g = g_inv(GroupElement<BigComplex>(ginv));
    rr.tau_matrix = x * g_to_matrix(rr.g);
    rr.tau.tau0 = rr.tau_matrix(0, 0);
    rr.tau.tau1 = rr.tau_matrix(2, 0);
    rr.tau.tau2 = rr.tau_matrix(3, 0);
    rr.tau.tau3 = rr.tau_matrix(2, 1);

    if (assert_pattern) {
        const Mat4c& t = rr.tau_matrix;
        BigFloat worst =
            abs(t(0, 1) - one);
        auto upd = [&](const BigFloat& v) { if (worst < v) worst = v; };
        upd(abs(t(0, 2)));
        upd(abs(t(0, 3)));
        upd(abs(t(1, 0) - one));
        upd(abs(t(1, 1)));
        upd(abs(t(1, 2)));
        upd(abs(t(1, 3)));
        upd(abs(t(2, 2) - one));
        upd(abs(t(2, 3)));
        upd(abs(t(3, 3) - one));
        upd(abs(t(3, 1) - (-(rr.tau.tau0 * rr.tau.tau3) + rr.tau.tau1)));
        upd(abs(t(3, 2) - (-rr.tau.tau0)));
        if (!(worst < tol))
            throw std::domain_error("reduce_to_special_form: pattern residual " + worst.str(6) +
                                    " exceeds tolerance " + tol.str(6));
    }
    return rr;
}

std::array<BigComplex, 7> t_values_at_point(const PeriodMatrix& pm) {
    mpfr_prec_t wp = pm.prec_bits + 64;
    auto rc = [&](const Rational& q) { return BigComplex::from_rational(q, wp); };
    BigComplex z = rc(pm.z0);
    BigComplex one = rc(Rational(1));
    const BigComplex &x11 = pm.raw(0, 0), &x12 = pm.raw(0, 1), &x13 = pm.raw(0, 2);
    const BigComplex &x21 = pm.raw(1, 0), &x22 = pm.raw(1, 1), &x23 = pm.raw(1, 2),
                     &x24 = pm.raw(1, 3);
    BigComplex x21_2 = x21 * x21;
    BigComplex x21_3 = x21_2 * x21;
    BigComplex x21_5 = x21_2 * x21_3;
    BigComplex zm1 = z - one;
    BigComplex wr12 = x12 * x21 - x11 * x22;
    BigComplex wr13 = x13 * x21 - x11 * x23;
    std::array<BigComplex, 7> t;
    t[0] = x21;
    t[1] = rc(Rational(625)) * x21 *
           ((rc(Rational(6)) * z - one) * x21 + rc(Rational(5)) * (rc(Rational(11)) * z - one) * x22 +
            rc(Rational(25)) * (rc(Rational(6)) * z - one) * x23 + rc(Rational(125)) * zm1 * x24);
    t[2] = rc(Rational(625)) * x21_2 *
           ((rc(Rational(2)) * z - rc(Rational(7))) * x21 + rc(Rational(15)) * zm1 * x22 +
            rc(Rational(25)) * zm1 * x23);
    t[3] = rc(Rational(625)) * x21_3 * ((z - rc(Rational(6))) * x21 + rc(Rational(5)) * zm1 * x22);
    t[4] = z * x21_5;
    t[5] = rc(Rational(3125)) * zm1 * x21_2 * wr12;
    t[6] = rc(Rational(3125)) * zm1 * x21 * (rc(Rational(3)) * wr12 + rc(Rational(5)) * wr13);
    return t;
}

namespace {

Mat4c int_to_c(const Mat4i& m, mpfr_prec_t prec) {
    Mat4c r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            r(i, j) = BigComplex::from_rational(Rational(m(i, j)), prec);
    return r;
}

std::string resid(const BigFloat& v) { return v.str(6); }

}  // namespace

CheckReport m1_cocycle_check(const PeriodMatrix& pm) {
    CheckReport rep;
    rep.suite = "cocycle";
    const mpfr_prec_t wp = pm.prec_bits + 64;
    BigFloat tol = BigFloat::pow2(-(long)(pm.prec_bits / 2), wp);
    BigComplex one = BigComplex::from_rational(Rational(1), wp);

    ReductionResult base = reduce_to_special_form(pm.m, tol);
    const BigComplex &tau0 = base.tau.tau0, &tau1 = base.tau.tau1, &tau2 = base.tau.tau2,
                     &tau3 = base.tau.tau3;

    // z = 0 monodromy: already in special form, identity cocycle, tau0 + 1.
    {
        Mat4c moved = int_to_c(monodromy_m0(), wp) * base.tau_matrix;
        ReductionResult r0 = reduce_to_special_form(moved, tol);
        GroupElement<BigComplex> coc = g_inv(r0.g);
        BigFloat worst = abs(coc[0] - one);
        for (int k = 1; k < 6; ++k) {
            BigFloat v = k == 1 ? abs(coc[k] - one) : abs(coc[k]);
            if (worst < v) worst = v;
        }
        rep.add("m0 cocycle is the identity", worst < tol, resid(worst));
        BigFloat shift = abs(r0.tau.tau0 - (tau0 + one));
        rep.add("m0 moves tau0 to tau0 + 1", shift < tol, resid(shift));
    }

    // z = 1 monodromy: reduce directly, compare with the closed form.
    GroupElement<BigComplex> g_m1 = GroupElement<BigComplex>::identity();
    {
        Mat4c moved = int_to_c(monodromy_m1(), wp) * base.tau_matrix;
        ReductionResult r1 = reduce_to_special_form(moved, tol);
        g_m1 = g_inv(r1.g);
        BigComplex den = tau0 * tau0 * tau3 - tau0 * tau1 + tau2 + one;
        std::array<BigComplex, 6> formula = {one / (tau2 + one),
                                             (tau2 + one) / den,
                                             (tau0 * tau3 - tau1) / (tau2 + one),
                                             -tau0 / den,
                                             one / den,
                                             (tau0 * tau0) / den};
        BigFloat worst(wp);
        for (int k = 0; k < 6; ++k) {
            BigFloat v = abs(g_m1[k] - formula[k]);
            if (worst < v) worst = v;
        }
        rep.add("m1 cocycle matches closed form", worst < tol, resid(worst));
        BigFloat mapres = abs(r1.tau.tau0 - tau0 / (tau2 + one));
        rep.add("m1 moves tau0 to tau0/(tau2 + 1)", mapres < tol, resid(mapres));
    }

    // Displayed functional equations, checked on the closed-form t-values.
    {
        std::array<BigComplex, 7> tw = t_values_at_point(pm);
        std::array<BigComplex, 7> tm = action_on_t(tw, g_inv(g_m1));
        std::array<BigComplex, 3> dm = derived_triple(tm);
        const BigComplex &s7 = dm[0], &s8 = dm[1], &s9 = dm[2];
        BigComplex tp = tau2 + one;
        BigComplex tq = tau0 * tau0 * tau3 - tau0 * tau1 + tau2 + one;
        BigComplex tp2 = tp * tp, tp3 = tp2 * tp, tp4 = tp3 * tp, tp5 = tp4 * tp;
        BigComplex w = tau0 * tau3 - tau1;
        std::array<BigComplex, 7> rhs = {
            tm[0] / tp,
            tm[1] / tp2 + s7 * w / (tp * tq) + s9 * (-tau0) / tp2 + one / tp,
            tm[2] / tp3 + tm[6] * w / (tp2 * tq) + s8 * (-tau0) / tp3,
            tm[3] / tp4 + tm[5] * w / (tp3 * tq),
            tm[4] / tp5,
            tm[5] / (tp2 * tq),
            tm[6] / (tp * tq) + s8 * (tau0 * tau0) / tp3};
        BigFloat worst(wp);
        for (int i = 0; i < 7; ++i) {
            BigFloat scale = abs(tw[i]);
            BigFloat denom = scale < BigFloat::from_long(1, wp)
                                 ? BigFloat::from_long(1, wp)
                                 : scale;
            BigFloat v = abs(tw[i] - rhs[i]) / denom;
            if (worst < v) worst = v;
        }
        rep.add("functional equations for t0..t6 hold at the point", worst < tol, resid(worst));

        BigComplex y = BigComplex::from_rational(Rational(390625), wp) *
                       (tw[4] - pow_int(tw[0], 5, wp)) * (tw[4] - pow_int(tw[0], 5, wp)) /
                       pow_int(tw[5], 3, wp);
        BigComplex ym = BigComplex::from_rational(Rational(390625), wp) *
                        (tm[4] - pow_int(tm[0], 5, wp)) * (tm[4] - pow_int(tm[0], 5, wp)) /
                        pow_int(tm[5], 3, wp);
        BigFloat yres = abs(y - ym * (tq * tq * tq) / tp4) / abs(y);
        rep.add("yukawa functional equation holds at the point", yres < tol, resid(yres));
    }
    return rep;
}

}  // namespace mirrorq
