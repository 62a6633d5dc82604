#include <doctest.h>

#include <random>

#include "mirrorq/group.hpp"
#include "mirrorq/series_vector.hpp"

using namespace mirrorq;

namespace {

Rational rr(std::mt19937& gen, bool nonzero = false) {
    std::uniform_int_distribution<long> num(-8, 8);
    std::uniform_int_distribution<long> den(1, 8);
    for (;;) {
        Rational v(num(gen), den(gen));
        if (!nonzero || !v.is_zero()) return v;
    }
}

GroupElement<Rational> rg(std::mt19937& gen) {
    return GroupElement<Rational>(
        {rr(gen, true), rr(gen, true), rr(gen), rr(gen), rr(gen), rr(gen)});
}

std::array<Rational, 7> rt(std::mt19937& gen) {
    for (;;) {
        std::array<Rational, 7> t = {rr(gen, true), rr(gen), rr(gen), rr(gen),
                                     rr(gen),       rr(gen, true), rr(gen)};
        if (t[4] != pow(t[0], 5)) return t;
    }
}

Mat4q to_q(const Mat4i& m) {
    Mat4q r;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r(i, j) = Rational(m(i, j));
    return r;
}

}  // namespace

TEST_CASE("monodromy identities in exact integer arithmetic") {
    CheckReport rep = check_monodromy_identities();
    CHECK(rep.all_pass());

    Mat4i psi = form_psi();
    Mat4i id = Mat4i::Identity();
    CHECK(Mat4i(id.transpose() * psi * id) == psi);
    Mat4i phi = form_phi();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            CHECK(phi(i, j) == ((i + j == 3) ? (i < 2 ? 1 : -1) : 0));
}

TEST_CASE("group element matrix, identity and coordinate errors") {
    GroupElement<Rational> id = GroupElement<Rational>::identity();
    Mat4q m = g_to_matrix(id);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(m(i, j) == Rational(i == j ? 1 : 0));
    CHECK(g_inv(id).g == id.g);

    GroupElement<Rational> two({Rational(2), Rational(1), Rational(0), Rational(0),
                                Rational(0), Rational(0)});
    CHECK(g_inv(two).g ==
          std::array<Rational, 6>{Rational(1, 2), Rational(1), Rational(0), Rational(0),
                                  Rational(0), Rational(0)});

    CHECK_THROWS_AS(GroupElement<Rational>({Rational(0), Rational(1), Rational(0), Rational(0),
                                            Rational(0), Rational(0)}),
                    std::domain_error);
}

TEST_CASE("closed-form inverse, factorization, Borel condition (100 samples)") {
    std::mt19937 gen(101);
    Mat4q phi = to_q(form_phi());
    Mat4q id;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) id(i, j) = Rational(i == j ? 1 : 0);
    for (int s = 0; s < 100; ++s) {
        GroupElement<Rational> g = rg(gen);
        Mat4q m = g_to_matrix(g);

        Mat4q prod = m * g_to_matrix(g_inv(g));
        CHECK(prod == id);
        CHECK(g_mul(g, g_inv(g)).g == GroupElement<Rational>::identity().g);

        CHECK(g_factor_product<Rational>(g.g) == m);
        CHECK(g_from_matrix(m).g == g.g);

        Mat4q borel = m.transpose() * phi * m;
        CHECK(borel == phi);
    }
}

TEST_CASE("right action: identity, scaling weights, composition law (100 samples)") {
    std::mt19937 gen(202);

    for (int s = 0; s < 100; ++s) {
        std::array<Rational, 7> t = rt(gen);
        CHECK(action_on_t(t, GroupElement<Rational>::identity()) == t);

        Rational k = rr(gen, true);
        GroupElement<Rational> scale(
            {k, Rational(1), Rational(0), Rational(0), Rational(0), Rational(0)});
        auto ts = action_on_t(t, scale);
        for (int i = 0; i < 7; ++i) CHECK(ts[i] == pow(k, SeriesVector::weight[i]) * t[i]);

        GroupElement<Rational> g = rg(gen);
        GroupElement<Rational> h = rg(gen);
        auto tg = action_on_t(t, g);
        if (tg[5].is_zero() || tg[4] == pow(tg[0], 5)) continue;
        CHECK(action_on_t(tg, h) == action_on_t(t, g_mul(g, h)));
    }
}

TEST_CASE("derived-coordinate equivariance (100 samples incl. scaling case)") {
    std::mt19937 gen(303);
    for (int s = 0; s < 100; ++s) {
        std::array<Rational, 7> t = rt(gen);
        GroupElement<Rational> g = rg(gen);
        auto lhs = derived_triple(action_on_t(t, g));
        auto rhs = action_on_derived(derived_triple(t), g);
        CHECK(lhs == rhs);
        CHECK(t10_value(action_on_t(t, g)) == action_on_t10(t10_value(t), g));
        CHECK(t10_value(t) == -derived_triple(t)[1] * t[5]);  // t10 = -t8 t5
    }
    // scaling case: t8 -> k^2 t8 explicitly
    std::array<Rational, 7> t = rt(gen);
    Rational k = rr(gen, true);
    GroupElement<Rational> scale({k, Rational(1), Rational(0), Rational(0), Rational(0),
                                  Rational(0)});
    auto d = derived_triple(t);
    auto ds = derived_triple(action_on_t(t, scale));
    CHECK(ds[0] == k * d[0]);           // t7 g1 g2
    CHECK(ds[1] == pow(k, 2) * d[1]);   // t8 g1^2 / g2
    CHECK(ds[2] == k * d[2]);           // t9 g1 / g2
}

TEST_CASE("degenerate tuples are rejected") {
    std::array<Rational, 7> t = {Rational(1), Rational(0), Rational(0), Rational(0),
                                 Rational(1), Rational(1), Rational(0)};
    CHECK_THROWS_AS(derived_triple(t), std::domain_error);  // t4 = t0^5
    std::array<Rational, 7> t2 = {Rational(1), Rational(0), Rational(0), Rational(0),
                                  Rational(2), Rational(0), Rational(0)};
    CHECK_THROWS_AS(derived_triple(t2), std::domain_error);  // t5 = 0
}
