#include <doctest.h>

#include "mirrorq/frobenius.hpp"
#include "mirrorq/recursion.hpp"
#include "mirrorq/yukawa.hpp"

using namespace mirrorq;

namespace {

struct YukawaFixture {
    FrobeniusBasis fb = frobenius_components(22);
    MirrorMap mm = mirror_map(fb);
    TruncSeries<> lambert = lambert_from_periods(fb, mm);
};

const YukawaFixture& fixture() {
    static YukawaFixture f;
    return f;
}

}  // namespace

TEST_CASE("lambert coefficients") {
    const auto& lam = fixture().lambert;
    CHECK(lam[1] == Rational(2875));
    CHECK(lam[2] == Rational(4876875));           // 2875 + 609250 * 8
    CHECK(lam[3] == Rational("8564575000"));
    CHECK(lam[4] == Rational("15517926796875"));
}

TEST_CASE("divisor-sum structure of the lambert coefficients") {
    const auto& lam = fixture().lambert;
    std::vector<mpz_class> nd = extract_instantons(lam, 12);
    for (int d = 1; d <= 12; ++d) {
        Rational c(0);
        for (int e = 1; e <= d; ++e)
            if (d % e == 0) c += Rational(nd[e]) * Rational((long)e * e * e);
        CHECK(lam[d] == c);
    }
}

TEST_CASE("instanton numbers through degree 10") {
    std::vector<mpz_class> nd = extract_instantons(fixture().lambert, 10);
    CHECK(nd[1] == mpz_class("2875"));
    CHECK(nd[2] == mpz_class("609250"));
    CHECK(nd[3] == mpz_class("317206375"));
    CHECK(nd[4] == mpz_class("242467530000"));
    CHECK(nd[5] == mpz_class("229305888887625"));
    CHECK(nd[6] == mpz_class("248249742118022000"));
    CHECK(nd[7] == mpz_class("295091050570845659250"));
    CHECK(nd[8] == mpz_class("375632160937476603550000"));
    CHECK(nd[9] == mpz_class("503840510416985243645106250"));
    CHECK(nd[10] == mpz_class("704288164978454686113488249750"));
}

TEST_CASE("cubic identity: measured sign, identical coefficients") {
    const auto& f = fixture();
    CubicIdentityResult res = cubic_identity_check(f.fb, f.mm, f.lambert);
    CHECK(res.report.all_pass());
    CHECK(res.sign == -1);  // the combination carries -(2/5), not +(2/5)
}

TEST_CASE("yukawa bracket and normalization constant") {
    SeriesVector sv = expand(22);
    TruncSeries<> bracket = yukawa_bracket(sv);
    CHECK(bracket[0] == Rational(-1, 25));  // 5^8 * 5^-10 / (-1)^3

    KappaResult kr = reconcile_normalization(bracket, fixture().lambert);
    CHECK(kr.proportional);
    CHECK(kr.kappa == Rational(-125));

    // sensitivity: a single perturbed coefficient breaks proportionality
    SeriesVector bad = sv;
    bad.h[4][2] += Rational(1);
    KappaResult kb = reconcile_normalization(yukawa_bracket(bad), fixture().lambert);
    CHECK_FALSE(kb.proportional);
    CHECK(kb.first_failure == 2);
}

TEST_CASE("non-integral lambert data is fatal") {
    TruncSeries<> fake(Var::Q, 3);
    fake[1] = Rational(2875);
    fake[2] = Rational(1, 2);
    CHECK_THROWS_AS(extract_instantons(fake, 2), std::runtime_error);
    CHECK_THROWS_AS(extract_instantons(fake, 9), std::invalid_argument);
}
