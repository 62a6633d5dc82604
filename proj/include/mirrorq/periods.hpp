#pragma once

#include <array>
#include <string>

#include "mirrorq/eigen_support.hpp"
#include "mirrorq/frobenius.hpp"
#include "mirrorq/group.hpp"
#include "mirrorq/report.hpp"

namespace mirrorq {

// Constants of the integral-basis assembly. b, d, k are exact; a needs
// zeta(3) and pi at working precision (a is purely imaginary).
struct PeriodAssembly {
    static Rational b() { return Rational(25, 12); }
    static Rational d() { return Rational(5); }
    static Rational k() { return 2 * b() + d() / Rational(6); }  // = 5
    static BigComplex a(mpfr_prec_t prec);                       // -200 zeta(3)/(2 pi i)^3
};

BigFloat zeta3(mpfr_prec_t prec);
BigFloat pi_value(mpfr_prec_t prec);

// Numeric period data at a real sample point z0 in (0,1) (the coordinate
// with the singular fiber at 1; series evaluate at ztilde = z0/5^5).
//   raw    x_{ij} = theta^{j-1} x_{i1}, the solution-column derivatives;
//   frame  raw * (S T)^T, periods of the de Rham frame;
//   m      frame * diag(1,1,-(2 pi i)^{-3},-(2 pi i)^{-3}), the normalized
//          matrix satisfying the six quadratic relations and det = -1.
struct PeriodMatrix {
    Mat4c m;
    Mat4c frame;
    Mat4c raw;
    Rational z0;
    mpfr_prec_t prec_bits = 0;
    int series_order = 0;
    std::string tail_bound;  // decimal magnitude of the largest last term
};

// order == 0 picks the order from the ratio-test estimate; the tail policy
// |last term| < 2^{-prec-20} is enforced and violations throw.
PeriodMatrix assemble_period_matrix(const Rational& z0, mpfr_prec_t prec, int order = 0);

// The six quadratic polynomials and the determinant; exact over Rational
// matrices, numeric over BigComplex ones.
template <class T>
struct QuadraticResiduals {
    std::array<T, 6> f;  // f12, f13, f14, f23, f24, f34
    T det;
};

template <class T>
QuadraticResiduals<T> quadratic_relations_residual(const Eigen::Matrix<T, 4, 4>& x) {
    auto e = [&](int i, int j) { return x(i - 1, j - 1); };
    QuadraticResiduals<T> r;
    r.f[0] = e(1, 2) * e(3, 1) - e(1, 1) * e(3, 2) + e(2, 2) * e(4, 1) - e(2, 1) * e(4, 2);
    r.f[1] = e(1, 3) * e(3, 1) - e(1, 1) * e(3, 3) + e(2, 3) * e(4, 1) - e(2, 1) * e(4, 3);
    r.f[2] = e(1, 4) * e(3, 1) - e(1, 1) * e(3, 4) + e(2, 4) * e(4, 1) - e(2, 1) * e(4, 4) + T(1);
    r.f[3] = e(1, 3) * e(3, 2) - e(1, 2) * e(3, 3) + e(2, 3) * e(4, 2) - e(2, 2) * e(4, 3) + T(1);
    r.f[4] = e(1, 4) * e(3, 2) - e(1, 2) * e(3, 4) + e(2, 4) * e(4, 2) - e(2, 2) * e(4, 4);
    r.f[5] = e(1, 4) * e(3, 3) - e(1, 3) * e(3, 4) + e(2, 4) * e(4, 3) - e(2, 3) * e(4, 4);
    r.det = det4(x);
    return r;
}

// Mirror coordinates read off the reduced special form.
struct MirrorCoordinates {
    BigComplex tau0, tau1, tau2, tau3;
};

struct ReductionResult {
    MirrorCoordinates tau;
    Mat4c tau_matrix;
    GroupElement<BigComplex> g;  // the right factor: x * g = special form
};

// Unique reduction x*g in the special patterned form; preconditions
// x21 != 0 and x11 x22 - x12 x21 != 0 (by tolerance), pattern asserted
// within tolerance. pattern_tol <= 0 skips the pattern assertion (used on
// frame-normalized matrices, which reduce but do not carry the pattern).
ReductionResult reduce_to_special_form(const Mat4c& x, const BigFloat& tol,
                                       bool assert_pattern = true);

// Cocycle checks at one sample point: the z=0 monodromy reduces to the
// identity cocycle with tau0 -> tau0 + 1, the z=1 monodromy cocycle matches
// its closed form in the mirror coordinates, and the displayed functional
// equations hold for the closed-form t-values.
CheckReport m1_cocycle_check(const PeriodMatrix& pm);

// Closed-form t-values at the sample point from the raw matrix.
std::array<BigComplex, 7> t_values_at_point(const PeriodMatrix& pm);

}  // namespace mirrorq
