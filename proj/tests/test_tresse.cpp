#include "test_support.hpp"

#include "segrekit/errors.hpp"
#include "segrekit/linear_gauge.hpp"
#include "segrekit/tresse.hpp"

#include <doctest.h>

using namespace segrekit;
using namespace testsupport;

namespace {

GaussRational gi() { return GaussRational::i(); }

ULaurent one() { return ULaurent(USeries(GaussRational(1), kExact)); }

// random P0Ode from free data (A, B, E, F), relations imposed
P0Ode rand_p0(std::mt19937& rng, int m, int n)
{
    return complete_p0(m, rand_series(rng, n), rand_series(rng, n), rand_series(rng, n),
                       rand_series(rng, n));
}

}  // namespace

TEST_CASE("validate_p0")
{
    P0Ode e = e_gamma(GaussRational(1));
    CHECK(validate_p0(e).empty());
    P0Ode bad = e;
    bad.C = USeries::monomial(1, 1);
    auto v = validate_p0(bad);
    REQUIRE(v.size() == 1);
    CHECK(v[0].relation == "C");
    CHECK(v[0].degree == 1);
    CHECK(v[0].difference == GaussRational(1));

    std::mt19937 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        RealStructureData d = rand_real_data(rng, 1 + trial % 4, 10);
        d.c.set(0, GaussRational(1));
        CHECK(validate_p0(build_real(d)).empty());
    }
    // D violation found at the first differing degree
    P0Ode p = rand_p0(rng, 2, 8);
    p.D.add_to(3, gi());
    auto w = validate_p0(p);
    REQUIRE(w.size() == 1);
    CHECK(w[0].relation == "D");
    CHECK(w[0].degree == 3);
}

TEST_CASE("general form relations agree")
{
    std::mt19937 rng(4);
    for (int trial = 0; trial < 8; ++trial) {
        P0Ode p = rand_p0(rng, 1 + trial % 3, 9);
        CHECK(validate_general(to_general(p)).empty());
        P0Ode q = p;
        q.C.add_to(2, GaussRational(1));
        CHECK_FALSE(validate_general(to_general(q)).empty());
    }
}

TEST_CASE("tresse examples")
{
    Ode2Poly flat{Poly2()};
    CHECK(tresse(flat, TresseWhich::L1).is_zero());
    CHECK(tresse(flat, TresseWhich::L2).is_zero());
    Ode2Poly sq{Poly2::term(one(), 2, 0)};
    Poly2 l2 = tresse(sq, TresseWhich::L2);
    // only a constant survives: 6 * Phi_yy = 12
    CHECK(l2.coeff(0, 0) == ULaurent(USeries(GaussRational(12), kExact)));
    CHECK((l2 - Poly2::term(ULaurent(USeries(GaussRational(12), kExact)), 0, 0)).is_zero());
    CHECK(tresse(sq, TresseWhich::L1).is_zero());
}

TEST_CASE("tresse independent term-by-term oracle")
{
    // Phi = a(x) y1^2 + b(x) y, evaluated by hand:
    //   Phi_pp = 2a, D Phi_pp = 2a', D^2 Phi_pp = 2a'', Phi_yp = 0, Phi_yy = 0,
    //   L2 = 2a'' - 2 a y1 * 2a' - 3 b * 2a
    ULaurent a = ULaurent(USeries::from_coeffs({1, 2, 0, 3}));
    ULaurent b = ULaurent(USeries::from_coeffs({0, gi()}));
    Poly2 phi = Poly2::term(a, 0, 2) + Poly2::term(b, 1, 0);
    Poly2 got = tresse(Ode2Poly{phi}, TresseWhich::L2);
    Poly2 want = Poly2::term(a.derivative().derivative() * GaussRational(2), 0, 0) -
                 Poly2::term(a * a.derivative() * GaussRational(4), 0, 1) -
                 Poly2::term(b * a * GaussRational(6), 0, 0);
    CHECK((got - want).is_zero());
}

TEST_CASE("tresse vanishes on P0 ODEs")
{
    std::mt19937 rng(21);
    for (int trial = 0; trial < 12; ++trial) {
        int m = 1 + trial % 4;
        P0Ode p = trial % 2 ? rand_p0(rng, m, 9) : build_real(rand_real_data(rng, m, 9));
        Ode2Poly o = ode_rhs(p);
        CHECK(tresse(o, TresseWhich::L1).is_zero());
        Poly2 l2 = tresse(o, TresseWhich::L2);
        CHECK(l2.is_zero());
        CHECK(l2.precision() < kExact);
    }
    // exact E_gamma
    CHECK(tresse(ode_rhs(e_gamma(GaussRational(3))), TresseWhich::L2).is_zero());
    // relation broken -> L2 detects it
    P0Ode bad = rand_p0(rng, 2, 9);
    bad.C.add_to(0, GaussRational(1));
    CHECK_FALSE(tresse(ode_rhs(bad), TresseWhich::L2).is_zero());
}

TEST_CASE("inverse and conjugate")
{
    InverseOde flat = inverse_ode(P0Ode::flat(1, kExact));
    CHECK(flat.A.is_zero());
    CHECK(flat.F.is_zero());
    InverseOde e0 = inverse_ode(e_gamma(GaussRational(0)));
    CHECK(e0.B == USeries::from_coeffs({gi() * GaussRational(2), 0, 0, -4}));
    CHECK(e0.E.is_zero());
    InverseOde e2 = inverse_ode(e_gamma(GaussRational(2)));
    CHECK(e2.E == USeries::monomial(2, 4));
    CHECK(e2.str().find("(w')^3") != std::string::npos);

    P0Ode c = conjugate_ode(e_gamma(GaussRational(1)));
    CHECK(c.B == USeries::from_coeffs({gi() * GaussRational(-2), 0, 0, -4}));
    CHECK(c.E == USeries::monomial(1, 4));
    std::mt19937 rng(2);
    for (int trial = 0; trial < 5; ++trial) {
        P0Ode p = rand_p0(rng, 2, 7);
        P0Ode cc = conjugate_ode(conjugate_ode(p));
        CHECK(cc.A == p.A);
        CHECK(cc.D == p.D);
        CHECK(validate_p0(conjugate_ode(p)).empty());
    }
    P0Ode real = P0Ode::flat(2, kExact);
    real.B = USeries::from_coeffs({1, 2});
    CHECK(conjugate_ode(real).B == real.B);
}

TEST_CASE("singularity order")
{
    P0Ode e = e_gamma(GaussRational(1));
    P0Ode raw = e;
    raw.m = 5;
    raw.A = e.A.shift(1);
    raw.B = e.B.shift(1);
    for (USeries* s : {&raw.C, &raw.D, &raw.E, &raw.F})
        *s = s->shift(2);
    P0Ode got = singularity_order(raw);
    CHECK(got.m == 4);
    CHECK(got.B == e.B);
    CHECK(got.E == e.E);
    P0Ode flat = P0Ode::flat(3, kExact);
    CHECK(singularity_order(flat).m == 1);
    CHECK(singularity_order(e).m == 4);
    CHECK(singularity_order(e).B == e.B);
}

TEST_CASE("p0 json")
{
    std::mt19937 rng(9);
    P0Ode p = rand_p0(rng, 3, 6);
    P0Ode q = p0_from_json(to_json(p));
    CHECK(q.m == 3);
    CHECK(q.A == p.A);
    CHECK(q.F == p.F);
    Json j = to_json(p);
    j["m"] = 0;
    CHECK_THROWS_AS(p0_from_json(j), ParseError);
}
