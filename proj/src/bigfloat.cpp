#include "mirrorq/bigfloat.hpp"

#include <cmath>
#include <cstdlib>
#include <vector>

namespace mirrorq {

std::string BigFloat::str(int digits) const {
    if (mpfr_zero_p(x_)) return "0";
    if (digits <= 0) digits = (int)std::ceil(prec() * 0.30103) + 2;
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, (size_t)digits, x_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    std::string sign;
    if (!mant.empty() && mant[0] == '-') {
        sign = "-";
        mant = mant.substr(1);
    }
    // mantissa is 0.mant * 10^e; emit d.ddd...e(exp)
    std::string out = sign + mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string((long)(e - 1));
    return out;
}

std::pair<BigFloat, BigFloat> evaluate_with_tail(const TruncSeries<>& s, const BigFloat& x) {
    mpfr_prec_t p = x.prec();
    BigFloat acc(p);
    for (int i = s.order(); i >= 0; --i)
        acc = acc * x + BigFloat::from_rational(s[i], p);
    int top = s.top_nonzero();
    BigFloat tail(p);
    if (top >= 0) {
        BigFloat xt = BigFloat::from_long(1, p);
        for (int i = 0; i < top; ++i) xt = xt * x;  // fine at these orders
        tail = abs(BigFloat::from_rational(s[top], p) * xt);
    }
    return {acc, tail};
}

}  // namespace mirrorq
