#include "mirrorq/recursion.hpp"

#include <stdexcept>
#include <string>

namespace mirrorq {

Mat7q vf_jacobian(const std::array<Rational, 7>& t) {
    const Rational &t0 = t[0], &t1 = t[1], &t2 = t[2], &t3 = t[3], &t4 = t[4], &t5 = t[5],
                   &t6 = t[6];
    const Rational p4(625), p5(3125), p6(15625), p8(390625), p9(1953125), p10(9765625);
    Rational t02 = t0 * t0, t03 = t02 * t0, t04 = t02 * t02, t05 = t04 * t0;
    Mat7q j;
    for (int r = 0; r < 7; ++r)
        for (int c = 0; c < 7; ++c) j(r, c) = Rational(0);

    j(0, 0) = 30 * p4 * t04 + t3;
    j(0, 3) = t0;
    j(0, 4) = -p4;

    j(1, 0) = -6 * p8 * t05 + 4 * p5 * (t03 * t1) + p8 * t4;
    j(1, 1) = p5 * t04 + t3;
    j(1, 3) = t1;
    j(1, 4) = p8 * t0;

    j(2, 0) = -21 * p9 * (t05 * t0) - 5 * p4 * (t04 * t1) + 8 * p5 * (t03 * t2) +
              6 * p9 * (t0 * t4);
    j(2, 1) = -p4 * t05 + p4 * t4;
    j(2, 2) = 2 * p5 * t04 + 2 * t3;
    j(2, 3) = 2 * t2;
    j(2, 4) = 3 * p9 * t02 + p4 * t1;

    j(3, 0) = -8 * p10 * (t05 * t02) - 5 * p4 * (t04 * t2) + 12 * p5 * (t03 * t3) +
              3 * p10 * (t02 * t4);
    j(3, 2) = -p4 * t05 + p4 * t4;
    j(3, 3) = 3 * p5 * t04 + 6 * t3;
    j(3, 4) = p10 * t03 + p4 * t2;

    j(4, 0) = 4 * p6 * (t03 * t4);
    j(4, 3) = 5 * t4;
    j(4, 4) = p6 * t04 + 5 * t3;

    j(5, 0) = -5 * p4 * (t04 * t6) + 12 * p5 * (t03 * t5);
    j(5, 3) = 2 * t5;
    j(5, 4) = p4 * t6;
    j(5, 5) = 3 * p5 * t04 + 2 * t3;
    j(5, 6) = -p4 * t05 + p4 * t4;

    j(6, 0) = 12 * p5 * (t03 * t6) - 3 * p5 * (t02 * t5);
    j(6, 2) = -2 * t5;
    j(6, 3) = 3 * t6;
    j(6, 5) = -p5 * t03 - 2 * t2;
    j(6, 6) = 3 * p5 * t04 + 3 * t3;
    return j;
}

Mat7q jacobian_A0() { return vf_jacobian(SeriesVector::initial_t0()); }

SeriesVector expand(int order) {
    if (order < 1) throw std::invalid_argument("expand: order must be >= 1");
    SeriesVector sv(order);
    auto T0 = SeriesVector::initial_t0();
    auto T1 = SeriesVector::initial_t1();
    for (int i = 0; i < 7; ++i) {
        sv.h[i][0] = T0[i];
        sv.h[i][1] = T1[i];
    }
    Mat7q A0 = jacobian_A0();
    for (int n = 2; n <= order; ++n) {
        // Coefficient of q^n in 5 q h' h5 = P(h), with the order-n unknowns
        // moved to the left as (A0 + 5n I) T_n.
        std::array<TruncSeries<>, 7> slice{
            TruncSeries<>(Var::Q, n), TruncSeries<>(Var::Q, n), TruncSeries<>(Var::Q, n),
            TruncSeries<>(Var::Q, n), TruncSeries<>(Var::Q, n), TruncSeries<>(Var::Q, n),
            TruncSeries<>(Var::Q, n)};
        for (int i = 0; i < 7; ++i)
            for (int m = 0; m < n; ++m) slice[i][m] = sv.h[i][m];
        std::array<TruncSeries<>, 7> P = vf_numerators(slice);
        Vec7q rhs;
        for (int i = 0; i < 7; ++i) {
            Rational conv(0);
            for (int m = 1; m < n; ++m) conv += Rational(m) * sv.h[i][m] * sv.h[5][n - m];
            rhs(i) = Rational(5) * conv - P[i][n];
        }
        Mat7q M = A0;
        for (int i = 0; i < 7; ++i) M(i, i) += Rational(5L * n);
        Vec7q x;
        try {
            x = solve_linear_exact<Rational, 7>(M, rhs);
        } catch (const std::runtime_error&) {
            throw std::runtime_error("expand: (A0 + 5nI) singular at n = " + std::to_string(n) +
                                     ", contradicting the recursion's invertibility");
        }
        for (int i = 0; i < 7; ++i) sv.h[i][n] = x(i);
    }
    return sv;
}

std::array<TruncSeries<>, 3> derived_t789(const SeriesVector& sv) {
    const auto& h = sv.h;
    TruncSeries<> t03 = h[0] * h[0] * h[0];
    TruncSeries<> t04 = t03 * h[0];
    TruncSeries<> t05 = t04 * h[0];
    TruncSeries<> num7 = (3125 * t04 + h[3]) * h[6] - (3125 * t03 + h[2]) * h[5];
    TruncSeries<> den7 = 625 * (h[4] - t05);
    TruncSeries<> h7 = num7 / den7;
    TruncSeries<> h8 = (625 * (t05 - h[4])) / h[5];
    TruncSeries<> h9 = (-(3125 * t04) - h[3]) / h[5];
    return {h7, h8, h9};
}

SeriesVector with_derived(SeriesVector sv) {
    sv.derived = derived_t789(sv);
    return sv;
}

namespace {

// 5 q d/dq
TruncSeries<> dot(const TruncSeries<>& s) { return 5 * theta(s); }

std::string first_mismatch(const TruncSeries<>& a, const TruncSeries<>& b, int upto) {
    for (int k = 0; k <= upto; ++k)
        if (a[k] != b[k])
            return "q^" + std::to_string(k) + ": " + (a[k] - b[k]).str();
    return "0";
}

void check_eq(CheckReport& rep, const std::string& name, const TruncSeries<>& lhs,
              const TruncSeries<>& rhs, int upto) {
    bool ok = true;
    for (int k = 0; k <= upto; ++k)
        if (lhs[k] != rhs[k]) { ok = false; break; }
    rep.add(name, ok, ok ? "0" : first_mismatch(lhs, rhs, upto));
}

}  // namespace

CheckReport verify_lovely1(const SeriesVector& sv) {
    if (!sv.derived) throw std::invalid_argument("verify_lovely1: derived series missing");
    const auto& h = sv.h;
    const auto& d = *sv.derived;
    const TruncSeries<> &h7 = d[0], &h8 = d[1], &h9 = d[2];
    const int upto = sv.order - 1;
    TruncSeries<> t02 = h[0] * h[0];
    TruncSeries<> h8sq_over_h5 = (h8 * h8) / h[5];

    CheckReport rep;
    rep.suite = "lovely1";
    check_eq(rep, "dot t0 = t8 - t0 t9", dot(h[0]), h8 - h[0] * h9, upto);
    check_eq(rep, "dot t1 = -t1 t9 - 5^4 t0 t8", dot(h[1]), -(h[1] * h9) - 625 * (h[0] * h8), upto);
    check_eq(rep, "dot t2 = -t1 t8 - 2 t2 t9 - 3*5^5 t0^2 t8", dot(h[2]),
             -(h[1] * h8) - 2 * (h[2] * h9) - 9375 * (t02 * h8), upto);
    check_eq(rep, "dot t3 = 4 t2 t8 - 3 t3 t9 - 5 (t7 t8 - t9 t6) t8", dot(h[3]),
             4 * (h[2] * h8) - 3 * (h[3] * h9) - 5 * ((h7 * h8 - h9 * h[6]) * h8), upto);
    check_eq(rep, "dot t4 = -5 t4 t9", dot(h[4]), -(5 * (h[4] * h9)), upto);
    check_eq(rep, "dot t5 = -t6 t8 - 3 t5 t9 - t3", dot(h[5]),
             -(h[6] * h8) - 3 * (h[5] * h9) - h[3], upto);
    check_eq(rep, "dot t6 = -2 t6 t9 - t2 - t7 t8", dot(h[6]),
             -(2 * (h[6] * h9)) - h[2] - h7 * h8, upto);
    check_eq(rep, "dot t7 = -t7 t9 - t1", dot(h7), -(h7 * h9) - h[1], upto);
    check_eq(rep, "dot t8 = (t8^2/t5) t6 - 3 t8 t9", dot(h8),
             h8sq_over_h5 * h[6] - 3 * (h8 * h9), upto);
    check_eq(rep, "dot t9 = (t8^2/t5) t7 - t9^2", dot(h9), h8sq_over_h5 * h7 - h9 * h9, upto);
    return rep;
}

CheckReport verify_modulispace_relations(const SeriesVector& sv) {
    if (!sv.derived)
        throw std::invalid_argument("verify_modulispace_relations: derived series missing");
    const auto& h = sv.h;
    const auto& d = *sv.derived;
    const TruncSeries<> &h7 = d[0], &h8 = d[1], &h9 = d[2];
    const int upto = sv.order;
    TruncSeries<> t03 = h[0] * h[0] * h[0];
    TruncSeries<> t04 = t03 * h[0];
    TruncSeries<> t05 = t04 * h[0];

    CheckReport rep;
    rep.suite = "moduli-relations";
    check_eq(rep, "t7 t8 - t6 t9 = 3125 t0^3 + t2", h7 * h8 - h[6] * h9, 3125 * t03 + h[2], upto);
    check_eq(rep, "t5 t9 = -3125 t0^4 - t3", h[5] * h9, -(3125 * t04) - h[3], upto);
    check_eq(rep, "t10 = -t8 t5 agrees with t10 = 625 (t4 - t0^5)", -(h8 * h[5]),
             625 * (h[4] - t05), upto);
    return rep;
}

}  // namespace mirrorq
