#include "test_support.hpp"

#include "segrekit/errors.hpp"
#include "segrekit/literal.hpp"
#include "segrekit/serialize.hpp"

#include <doctest.h>

using namespace segrekit;
using namespace testsupport;

namespace {

GaussRational gi() { return GaussRational::i(); }
GaussRational q(long a, long b = 1) { return GaussRational::frac(a, b); }

USeries poly(std::initializer_list<GaussRational> cs, int trunc = kExact)
{
    return USeries::from_coeffs(std::vector<GaussRational>(cs), trunc);
}

}  // namespace

TEST_CASE("gauss rationals")
{
    GaussRational a(Rational(1, 2), Rational(-3, 4));
    CHECK(a.str() == "1/2-3/4i");
    CHECK(GaussRational::parse(a.str()) == a);
    CHECK(GaussRational::parse("i") == gi());
    CHECK(GaussRational::parse("-2i") == gi() * q(-2));
    CHECK(GaussRational::parse("-1/2i") == gi() * q(-1, 2));
    CHECK(GaussRational::parse("1+2i") == GaussRational(1) + gi() * q(2));
    CHECK_THROWS_AS(GaussRational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(GaussRational::parse("2x"), ParseError);
    CHECK((gi() * q(2)).inverse() == gi() * q(-1, 2));
    CHECK(a * a.inverse() == GaussRational(1));
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).is_real());
    // reduced form
    GaussRational r(Rational(2, 4), Rational(0));
    CHECK(r.re().get_den() == 2);
    CHECK(binomial(Rational(-1, 3), 2) == Rational(2, 9));
}

TEST_CASE("arith examples")
{
    CHECK(poly({1, 1}) * poly({1, -1}) == poly({1, 0, -1}));
    ULaurent winv = ULaurent::monomial(1, -1);
    ULaurent w = ULaurent::monomial(1, 1);
    CHECK(winv * w == ULaurent(USeries(GaussRational(1), kExact)));
    USeries b = poly({gi() * q(2), 0, 0, -4});
    CHECK(b + USeries::monomial(4, 3) == USeries(gi() * q(2), kExact));
    CHECK_THROWS_AS(USeries(5, "w") + USeries(5, "z"), StructuralError);
}

TEST_CASE("derivative examples")
{
    CHECK(USeries::monomial(1, 4).derivative() == USeries::monomial(4, 3));
    CHECK(ULaurent::monomial(1, -3).derivative() == ULaurent::monomial(-3, -4));
    USeries s = poly({1, 0, 0, gi() * q(3, 2)});
    CHECK(s.derivative() == USeries::monomial(gi() * q(9, 2), 2));
}

TEST_CASE("invert_unit examples")
{
    USeries g = poly({1, -1}).inverse(8);
    for (int d = 0; d < 8; ++d)
        CHECK(g.coeff(d) == GaussRational(1));
    CHECK(g.trunc() == 8);
    CHECK(USeries(gi() * q(2), kExact).inverse() == USeries(gi() * q(-1, 2), kExact));
    USeries h = poly({1, 1, 1}).inverse(10);
    CHECK(h.coeff(1) == q(-1));
    CHECK(h.coeff(2) == q(0));
    CHECK(h.coeff(3) == q(1));
    CHECK((h * poly({1, 1, 1})).equal_mod(USeries(GaussRational(1), 10)));
    CHECK_THROWS_AS(poly({0, 1}).inverse(5), NonUnitError);
}

TEST_CASE("exp and log examples")
{
    USeries e = USeries::monomial(1, 1).exp(6);
    CHECK(e.coeff(2) == q(1, 2));
    CHECK(e.coeff(3) == q(1, 6));
    CHECK(e.coeff(5) == q(1, 120));
    USeries l = poly({1, 1}).log(6);
    CHECK(l.coeff(1) == q(1));
    CHECK(l.coeff(2) == q(-1, 2));
    CHECK(l.coeff(3) == q(1, 3));
    USeries s = poly({1, 1, 0, 0, 0, 1});
    CHECK(s.log(12).exp().equal_mod(s));
    CHECK_THROWS_AS(poly({1, 1}).exp(5), DomainError);
    CHECK_THROWS_AS(poly({2, 1}).log(5), DomainError);
}

TEST_CASE("binomial powers")
{
    USeries p = poly({1, 1}).pow(Rational(-1, 3), 6);
    CHECK(p.coeff(1) == q(-1, 3));
    CHECK(p.coeff(2) == q(2, 9));
    CHECK(p.coeff(3) == q(-14, 81));
    CHECK(poly({1, 1}).pow(3) == poly({1, 3, 3, 1}));
    CHECK_THROWS_AS(poly({2, 1}).pow(Rational(1, 2), 5), DomainError);
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        USeries s = rand_unit(rng, 14);
        CHECK(s.pow(Rational(-1, 3)).pow(-3) == s);
        USeries r = s.pow(Rational(1, 2));
        CHECK(r * r == s);
    }
}

TEST_CASE("substitution examples")
{
    TriSeries t = TriSeries::monomial(1, {0, 0, 1}) + TriSeries::monomial(1, {1, 1, 1});
    TriSeries got = compose(USeries::monomial(1, 2), t);
    TriSeries want = TriSeries::monomial(1, {0, 0, 2}) + TriSeries::monomial(2, {1, 1, 2}) +
                     TriSeries::monomial(1, {2, 2, 2});
    CHECK(got == want);
    USeries geo = poly({1, -1}).inverse(10);
    USeries c = geo.compose(USeries::monomial(1, 2));
    CHECK(c.trunc() == 20);
    for (int d = 0; d < 20; ++d)
        CHECK(c.coeff(d) == GaussRational(d % 2 == 0 ? 1 : 0));
    USeries e = USeries::monomial(1, 1).exp(12);
    USeries lg = poly({1, 1}).log(12);
    CHECK(e.compose(lg).equal_mod(poly({1, 1})));
    CHECK_THROWS_AS(geo.compose(poly({1, 1})), DomainError);
}

TEST_CASE("ring axioms against a dense oracle")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + trial % 16;
        USeries a = rand_series(rng, n), b = rand_series(rng, n), c = rand_series(rng, n);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        auto dense = dense_product(a, b, n);
        USeries ab = a * b;
        for (int d = 0; d < ab.trunc() && d < n; ++d)
            CHECK(ab.coeff(d) == dense[d]);
    }
}

TEST_CASE("valuation-aware truncation")
{
    USeries a = USeries::monomial(1, 2, 5);
    USeries b = USeries::monomial(1, 3, 6);
    USeries ab = a * b;
    // unknown tails start at w^5 * w^3 and w^2 * w^6
    CHECK(ab.trunc() == 8);
    CHECK(ab.coeff(5) == GaussRational(1));
    USeries exact = USeries::monomial(1, 3);
    CHECK((exact * USeries(GaussRational(1), 4)).trunc() == 7);
}

TEST_CASE("functional equations on random units")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 4 + trial % 13;
        USeries s = rand_unit(rng, n);
        CHECK((s * s.inverse()).equal_mod(USeries(GaussRational(1), n)));
        CHECK(s.log().exp() == s);
        USeries x = rand_series(rng, n, 1);
        CHECK(x.exp().log() == x);
        USeries y = rand_series(rng, n, 1);
        CHECK((x + y).exp() == x.exp() * y.exp());
        // derivation, one order lost
        USeries t = rand_series(rng, n);
        USeries lhs = (s * t).derivative();
        USeries rhs = s.derivative() * t + s * t.derivative();
        CHECK(lhs.trunc() == n - 1);
        CHECK(lhs.equal_mod(rhs));
    }
}

TEST_CASE("reversion")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        USeries g = rand_series(rng, 12, 2);
        g.set(1, GaussRational(1));
        USeries r = g.reversion();
        CHECK(g.compose(r).equal_mod(USeries::monomial(1, 1)));
        CHECK(r.compose(g).equal_mod(USeries::monomial(1, 1)));
    }
}

TEST_CASE("determinism")
{
    std::mt19937 r1(99), r2(99);
    USeries a = rand_unit(r1, 12), b = rand_unit(r2, 12);
    CHECK(to_json(a.pow(Rational(-1, 3))).dump() == to_json(b.pow(Rational(-1, 3))).dump());
}

TEST_CASE("laurent series")
{
    ULaurent p = parse_laurent("2i*w^-4 - 4*w^-1");
    CHECK(p.pole() == 4);
    CHECK(p.coeff(-4) == gi() * q(2));
    CHECK(p.coeff(-1) == q(-4));
    ULaurent inv = p.inverse(6);
    CHECK((inv * p).first_difference(ULaurent(USeries(GaussRational(1), kExact))) == std::nullopt);
    CHECK(inv.valuation() == 4);
    CHECK_THROWS_AS(p.to_series(), DomainError);
    CHECK(ULaurent::monomial(3, 2).to_series() == USeries::monomial(3, 2));
    ULaurent d = (p * p).derivative();
    ULaurent d2 = p.derivative() * p * GaussRational(2);
    CHECK(d == d2);
}

TEST_CASE("trivariate ring and derivations")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 12; ++trial) {
        TriSeries::Truncs t{3 + trial % 3, 3, 4};
        TriSeries a = rand_tri(rng, t), b = rand_tri(rng, t), c = rand_tri(rng, t);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        for (int slot = 0; slot < 3; ++slot) {
            TriSeries lhs = (a * b).derivative(slot);
            TriSeries rhs = a.derivative(slot) * b + a * b.derivative(slot);
            CHECK_FALSE(lhs.first_difference(rhs).has_value());
        }
        CHECK(a.swap_z_xi().swap_z_xi() == a);
        CHECK(a.conj().conj() == a);
    }
}

TEST_CASE("trivariate exp, log and composition")
{
    std::mt19937 rng(6);
    for (int trial = 0; trial < 8; ++trial) {
        TriSeries::Truncs t{4, 4, 5};
        TriSeries x = rand_tri(rng, t, 0.3);
        x.set({0, 0, 0}, GaussRational());
        for (int l = 0; l < 4; ++l)
            for (int j = 0; j < 5; ++j)
                x.set({0, l, j}, GaussRational());
        CHECK(x.exp().log() == x);
        TriSeries u = TriSeries::constant(1) + x;
        CHECK_FALSE((u * u.inverse()).first_difference(TriSeries::constant(1)).has_value());
        // Taylor-shift substitution against Horner: same rho, same argument
        TriSeries rho = rand_tri(rng, {4, 4, 5}, 0.3);
        TriSeries arg = (TriSeries::constant(1) + x).shift({0, 0, 1});
        TriSeries taylor = compose_eta(rho, arg);
        TriSeries horner(rho.truncs());
        TriSeries power = TriSeries::constant(1);
        for (int j = 0; j < 5; ++j) {
            TriSeries slice(TriSeries::Truncs{4, 4, kExact});
            for (const auto& [e, c] : rho.terms())
                if (e[2] == j)
                    slice.set({e[0], e[1], 0}, c);
            horner += slice * power;
            power = power * arg;
        }
        CHECK_FALSE(taylor.first_difference(horner).has_value());
    }
    TriSeries nonnil = TriSeries::constant(1).truncated({3, 3, 3});
    CHECK_THROWS_AS(nonnil.exp(), DomainError);
}

TEST_CASE("series literals")
{
    USeries s = parse_series("1,0,0,2i");
    CHECK(s == poly({1, 0, 0, gi() * q(2)}));
    USeries t = parse_series("(1+2i)*w^3 + w - 3/4", "w", 6);
    CHECK(t.trunc() == 6);
    CHECK(t.coeff(3) == GaussRational(1) + gi() * q(2));
    CHECK(t.coeff(1) == q(1));
    CHECK(t.coeff(0) == q(-3, 4));
    CHECK(parse_series("w^4", "w").degree() == 4);
    CHECK_THROWS_AS(parse_series("w^-1"), ParseError);
    CHECK_THROWS_AS(parse_series("1 +"), ParseError);
    CHECK_THROWS_AS(parse_laurent("x^2"), ParseError);
    // terms at or beyond the truncation are discarded
    CHECK(parse_series("w^9 + 1", "w", 4) == USeries(GaussRational(1), 4));
}

TEST_CASE("json round trips")
{
    std::mt19937 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        USeries s = rand_series(rng, 1 + trial);
        CHECK(series_from_json(to_json(s)) == s);
        GaussRational c = rand_scalar(rng);
        CHECK(scalar_from_json(to_json(c)) == c);
        TriSeries t = rand_tri(rng, {2, 3, 4});
        CHECK(triseries_from_json(to_json(t)) == t);
    }
    USeries ex = poly({1, 2});
    CHECK(to_json(ex)["trunc"].is_null());
    CHECK(series_from_json(to_json(ex)) == ex);
    ULaurent l = parse_laurent("2i*w^-4 - 4*w^-1");
    CHECK(laurent_from_json(to_json(l)) == l);
    CHECK(scalar_from_json(Json("3/2-i")) == q(3, 2) - gi());
    CHECK_THROWS_AS(series_from_json(Json::parse("{\"var\":\"w\"}")), ParseError);
}
