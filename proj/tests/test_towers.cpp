#include <doctest.h>

#include <stdexcept>

#include "rzeta/greens.hpp"
#include "rzeta/towers.hpp"

using namespace rzeta;
using namespace rzeta::towers;

namespace {

const RationalPoly q = RationalPoly::var();

DimensionPoly dim(const RationalPoly& a) { return DimensionPoly::from(a); }

ZetaPoly term(const RationalPoly& mult, const RationalPoly& d) {
    return ZetaPoly::term(dim(d), mult);
}

RationalPoly half(const RationalPoly& a) { return a * RationalPoly(Rational(1, 2)); }

// R_{G(3,1,1)} written out term by term.
ZetaPoly g32_expected() {
    RationalPoly q2 = q * q, q3 = q * q * q;
    ZetaPoly z;
    z += term(q * (q - 1) * (q - 1), RationalPoly(1));
    z += term(half(q2 * (q - 1) * (q - 1)), q - 1);
    z += term(q * (q - 1) * (q - 1), q);
    z += term(half(q * (q - 1) * (q - 1) * (q - 2)), q + 1);
    z += term(q * (q - 1) * (q - 1) * 2, (q - 1) * (q + 1));
    z += term(q * (q - 1) * (q - 1) * (q - 1), q2);
    z += term(q * (q - 1) * (q + 2), (q - 1) * (q - 1) * (q + 1));
    z += term(half(q2 * (q - 1) * (q - 1) * (q - 1)), q2 * (q - 1));
    z += term(q * (q - 1) * (q - 1) * (q - 1), q * (q - 1) * (q + 1));
    z += term(q * (q - 1) * (q - 1) * (q - 1), q3);
    z += term(half(q * (q - 1) * (q - 1) * (q - 1) * (q - 2)), q2 * (q + 1));
    return z;
}

}  // namespace

TEST_CASE("P tower") {
    CHECK(p_zeta(1) == ZetaPoly::term(DimensionPoly(1), RationalPoly(1)));
    ZetaPoly p2 = term(q - 1, RationalPoly(1)) + term(RationalPoly(1), q - 1);
    CHECK(p_zeta(2) == p2);
    CHECK(p_zeta(3).size() == 6);
    CHECK(p_zeta(3).count() == q * q + q - 1);
    CHECK_THROWS_AS(p_zeta(0), std::invalid_argument);
}

TEST_CASE("T tower") {
    CHECK(t_zeta(2) == term(q, RationalPoly(1)));
    ZetaPoly t3 = term((q - 1) * (q - 1), q) + term(q + 1, q - 1) + term(q - 1, RationalPoly(1));
    CHECK(t_zeta(3) == t3);
    CHECK(t_zeta(4).second_moment() == poly_pow(q, 5) * gl_order(2));
    CHECK_THROWS_AS(t_zeta(1), std::invalid_argument);
}

TEST_CASE("semidirect family assembles from the four summands") {
    ZetaPoly expect = greens::gl_zeta(2);
    expect += p_zeta(2).subst(dim(q * q - 1)).scaled(RationalPoly(2));
    expect += t_zeta(2).subst(dim((q * q - 1) * (q - 1)));
    expect += greens::gl_zeta(1).subst(dim(q * (q * q - 1))).scaled(q - 1);
    CHECK(sd_zeta(2) == expect);

    // the P- and T-substituted dimensions collide at (q-1)(q^2-1); the
    // merged multiplicity q+2 shows up scaled by q(q-1) inside g_zeta(3,2)
    auto it = sd_zeta(2).terms().find(dim((q - 1) * (q - 1) * (q + 1)));
    REQUIRE(it != sd_zeta(2).terms().end());
    CHECK(it->second == q + 2);
    CHECK(sd_zeta(2).size() == 7);

    CHECK(sd_zeta(2).second_moment() == poly_pow(q, 4) * gl_order(2));
    CHECK(numerator(sd_zeta(2).count().eval(2)) == 10);
}

TEST_CASE("main family matches the closed-form expansion") {
    CHECK(g_zeta(3, 2) == g32_expected());
    CHECK(g_zeta(3, 2).size() == 11);
}

TEST_CASE("main family term count at (2, 3)") {
    const ZetaPoly& z = g_zeta(2, 3);
    CHECK(z.size() == 24);
    int maxdeg = 0;
    for (const auto& [d, m] : z.terms()) maxdeg = std::max(maxdeg, d.degree());
    CHECK(maxdeg == 6);
}

TEST_CASE("evaluation vector for g(3,2) at q=2") {
    DimensionMultiset expect;
    expect.add(1, 4);
    expect.add(2, 2);
    expect.add(3, 12);
    expect.add(4, 4);
    expect.add(6, 2);
    expect.add(8, 2);
    CHECK(g_zeta(3, 2).eval_at(2) == expect);
    CHECK(expect.sum_of_squares() == 384);
}

TEST_CASE("moment identities across the towers") {
    for (int n = 1; n <= 5; ++n) CHECK(p_zeta(n).second_moment() == order_poly(FamilyId::p(n)));
    for (int n = 2; n <= 5; ++n) CHECK(t_zeta(n).second_moment() == order_poly(FamilyId::t(n)));
    for (int n = 2; n <= 4; ++n) CHECK(sd_zeta(n).second_moment() == order_poly(FamilyId::sd(n)));
    for (int ell = 2; ell <= 4; ++ell)
        for (int n = 2; n <= 3; ++n)
            CHECK(g_zeta(ell, n).second_moment() == order_poly(FamilyId::g(ell, n)));
}

TEST_CASE("count consistency for the main family") {
    for (int ell = 2; ell <= 4; ++ell)
        for (int n = 2; n <= 3; ++n) {
            RationalPoly pre = poly_pow(q, ell - 2) * (q - 1);
            CHECK(g_zeta(ell, n).count() ==
                  pre * (q - 1) * greens::gl_zeta(n).count() + pre * sd_zeta(n).count());
        }
}

TEST_CASE("raising ell scales by q") {
    for (int ell = 2; ell <= 5; ++ell)
        for (int n = 2; n <= 3; ++n) CHECK(g_zeta(ell + 1, n) == g_zeta(ell, n).scaled(q));
}

TEST_CASE("multiplicities and dimensions are integral at prime powers") {
    for (int qv : {2, 3, 4, 5, 7, 8, 9}) {
        for (int n = 1; n <= 4; ++n) p_zeta(n).eval_at(qv);
        for (int n = 2; n <= 4; ++n) t_zeta(n).eval_at(qv);
        for (int n = 2; n <= 3; ++n) sd_zeta(n).eval_at(qv);
        g_zeta(2, 2).eval_at(qv);
        g_zeta(3, 2).eval_at(qv);
        g_zeta(2, 3).eval_at(qv);
    }
}

TEST_CASE("order polynomials") {
    CHECK(order_poly(FamilyId::gl(2)) == (q * q - 1) * (q * q - q));
    CHECK(order_poly(FamilyId::p(2)) == q * (q - 1));
    CHECK(order_poly(FamilyId::t(2)) == q);
    CHECK(numerator(order_poly(FamilyId::g(3, 2)).eval(2)) == 384);
    CHECK(order_poly(FamilyId::sd(2)) == poly_pow(q, 4) * gl_order(2));
}

TEST_CASE("family validation") {
    CHECK_THROWS_AS(g_zeta(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(g_zeta(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(sd_zeta(1), std::invalid_argument);
    CHECK_THROWS_AS(family_zeta(FamilyId::gl(-1)), std::invalid_argument);
    CHECK(family_zeta(FamilyId::g(3, 2)) == g_zeta(3, 2));
    CHECK(FamilyId::g(3, 2).name() == "g(3,2)");
}
