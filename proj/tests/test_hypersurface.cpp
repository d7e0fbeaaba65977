#include "test_support.hpp"

#include "segrekit/errors.hpp"
#include "segrekit/hypersurface.hpp"
#include "segrekit/linear_gauge.hpp"

#include <doctest.h>

using namespace segrekit;
using namespace testsupport;

namespace {

GaussRational gi() { return GaussRational::i(); }

BiPoly mono(GaussRational c, int a, int b) { return BiPoly::monomial(c, a, b); }

HyperJet m0_jet(int n = 12)
{
    P0Ode e0 = truncated(e_gamma(GaussRational(0)), n);
    return build_hypersurface(solve_phi(e0, 4, Sign::Plus, {5, 5, n}));
}

// the automorphism fields of M_0, the two quadratic ones scaled by sqrt 2
std::vector<HoloField> m0_fields()
{
    return {
        HoloField{mono(gi(), 1, 0), BiPoly()},
        HoloField{BiPoly(), mono(2, 0, 4)},
        HoloField{mono(1, 0, 0) + mono(-2, 2, 0), mono(gi(), 1, 4)},
        HoloField{mono(gi(), 0, 0) + mono(GaussRational(2) * gi(), 2, 0), mono(1, 1, 4)},
    };
}

}  // namespace

TEST_CASE("build examples")
{
    // phi = z xib, m = 1: rho = wb exp(i z zb)
    AdmissiblePhi flat{1, Sign::Plus, TriSeries::monomial(GaussRational(1), {1, 1, 0}, {6, 6, 6})};
    HyperJet h = build_hypersurface(flat);
    CHECK(h.rho.labels() == hyper_labels());
    GaussRational fact(1), ik(1);
    for (int k = 0; k < 6; ++k) {
        if (k > 0) {
            fact = fact * GaussRational(k);
            ik = ik * gi();
        }
        CHECK(h.rho.coeff({k, k, 1}) == ik * fact.inverse());
    }
    CHECK(h.rho.coeff({1, 0, 1}).is_zero());

    AdmissiblePhi flat2{2, Sign::Plus, flat.phi};
    HyperJet h2 = build_hypersurface(flat2);
    CHECK(h2.rho.coeff({0, 0, 1}) == GaussRational(1));
    CHECK(h2.rho.coeff({1, 1, 2}) == gi());

    HyperJet e = build_hypersurface(
        solve_phi(truncated(e_gamma(GaussRational(1)), 10), 4, Sign::Plus, {4, 4, 10}));
    CHECK(e.rho.coeff({0, 0, 1}) == GaussRational(1));
    CHECK(e.rho.coeff({1, 1, 4}) == gi());
    CHECK(e.rho.coeff({1, 1, 1}).is_zero());
    // the (2,2) slice of phi enters at wb^4 and then at wb^7 through 3i/2 wb^3
    CHECK(e.rho.coeff({2, 2, 4}) == gi());
    CHECK(e.rho.coeff({1, 0, 4}).is_zero());

    AdmissiblePhi neg{1, Sign::Minus, flat.phi};
    CHECK(build_hypersurface(neg).rho.coeff({1, 1, 1}) == -gi());
}

TEST_CASE("reality_verify")
{
    AdmissiblePhi flat{1, Sign::Plus, TriSeries::monomial(GaussRational(1), {1, 1, 0}, {6, 6, 6})};
    CHECK(reality_verify(build_hypersurface(flat)).ok());
    CHECK(reality_defect(build_hypersurface(flat)).is_zero());

    AdmissiblePhi flat2{2, Sign::Plus, flat.phi};
    Report r = reality_verify(build_hypersurface(flat2));
    CHECK_FALSE(r.ok());
    REQUIRE(r.witness);
    auto mon = (*r.witness)["monomial"];
    CHECK(mon[0] == 2);
    CHECK(mon[1] == 2);

    std::mt19937 rng(23);
    for (int trial = 0; trial < 6; ++trial) {
        int m = 1 + trial % 3;
        RealStructureData d = rand_real_data(rng, m, 7);
        P0Ode o = build_real(d);
        AdmissiblePhi phi = solve_phi(o, m, Sign::Plus, {4, 4, 7});
        HyperJet h = build_hypersurface(phi);
        CHECK(reality_verify(h).ok());
        // the conjugated family carries the negative hypersurface
        HyperJet hn = build_hypersurface(conjugate_phi(phi));
        CHECK(hn.sign == Sign::Minus);
        CHECK(reality_verify(hn).ok());
    }

    HyperJet e1 = build_hypersurface(
        solve_phi(truncated(e_gamma(GaussRational(1)), 10), 4, Sign::Plus, {4, 4, 10}));
    CHECK(reality_verify(e1).ok());
    // E -> E + i w^5 breaks reality
    P0Ode bad = truncated(e_gamma(GaussRational(1)), 10);
    bad.E.add_to(5, gi());
    Report rb = reality_verify(build_hypersurface(solve_phi(bad, 4, Sign::Plus, {4, 4, 10})));
    CHECK_FALSE(rb.ok());
    CHECK(rb.residual_order);
}

TEST_CASE("tangency on M_0")
{
    HyperJet h = m0_jet();
    for (const auto& X : m0_fields())
        CHECK(tangency_check(h, X).ok());

    Report dz = tangency_check(h, HoloField{mono(1, 0, 0), BiPoly()});
    CHECK_FALSE(dz.ok());
    REQUIRE(dz.witness);
    CHECK(dz.residual_order);

    // the printed w-components, four times too large
    HoloField x5{mono(1, 0, 0) + mono(-2, 2, 0), mono(GaussRational(4) * gi(), 1, 4)};
    HoloField x6{mono(gi(), 0, 0) + mono(GaussRational(2) * gi(), 2, 0), mono(4, 1, 4)};
    CHECK_FALSE(tangency_check(h, x5).ok());
    CHECK_FALSE(tangency_check(h, x6).ok());

    // w d/dw alone is not tangent when m = 4
    CHECK_FALSE(tangency_check(h, HoloField{BiPoly(), mono(1, 0, 1)}).ok());
}

TEST_CASE("tangency oracle for wb exp(i z zb)")
{
    AdmissiblePhi flat{1, Sign::Plus, TriSeries::monomial(GaussRational(1), {1, 1, 0}, {6, 6, 6})};
    HyperJet h = build_hypersurface(flat);
    CHECK(tangency_check(h, HoloField{mono(gi(), 1, 0), BiPoly()}).ok());
    CHECK(tangency_check(h, HoloField{BiPoly(), mono(1, 0, 1)}).ok());
    // d/dz: residual -(rho_z + rho_zb) = -i (z + zb) rho
    TriSeries r = tangency_residual(h, HoloField{mono(1, 0, 0), BiPoly()});
    TriSeries want = -(h.rho.shift({1, 0, 0}) + h.rho.shift({0, 1, 0})) * gi();
    CHECK((r - want).is_zero());
    Report rep = tangency_check(h, HoloField{mono(1, 0, 0), BiPoly()});
    CHECK(rep.residual_order == 2);
    CHECK((*rep.witness)["monomial"] == Json::array({0, 1, 1}));
}

TEST_CASE("tangency is real-linear and closed under brackets")
{
    HyperJet h = m0_jet();
    auto f = m0_fields();
    HoloField combo = f[0] * GaussRational::frac(3, 2) + f[2] * GaussRational(-2) + f[3];
    CHECK(tangency_check(h, combo).ok());
    // complex multiples are not automorphisms in general
    CHECK_FALSE(tangency_check(h, f[0] * gi()).ok());
    for (size_t a = 0; a < f.size(); ++a)
        for (size_t b = a + 1; b < f.size(); ++b)
            CHECK(tangency_check(h, lie_bracket(f[a], f[b])).ok());
    HoloField br = lie_bracket(f[2], f[3]);
    CHECK_FALSE(br.fz.is_zero());
}

TEST_CASE("bipoly algebra")
{
    BiPoly p = mono(2, 1, 3) + mono(gi(), 0, 1);
    CHECK(p.d_z() == mono(2, 0, 3));
    CHECK(p.d_w() == mono(6, 1, 2) + mono(gi(), 0, 0));
    CHECK((p - p).is_zero());
    CHECK(p * mono(1, 1, 0) == mono(2, 2, 3) + mono(gi(), 1, 1));
    CHECK_THROWS_AS(mono(1, -1, 0), DomainError);
    HoloField X{mono(1, 0, 0), BiPoly()}, Y{mono(1, 1, 0), BiPoly()};
    // [d/dz, z d/dz] = d/dz
    HoloField b = lie_bracket(X, Y);
    CHECK(b.fz == mono(1, 0, 0));
    CHECK(b.fw.is_zero());
}

TEST_CASE("hypersurface json")
{
    HyperJet h = m0_jet(8);
    HyperJet back = hyperjet_from_json(to_json(h));
    CHECK(back.m == 4);
    CHECK(back.rho == h.rho);
    HoloField X = m0_fields()[3];
    HoloField Y = field_from_json(to_json(X));
    CHECK(Y.fz == X.fz);
    CHECK(Y.fw == X.fw);
    Json bad = to_json(X);
    bad["fz"][0]["deg"] = Json::array({-1, 0});
    CHECK_THROWS_AS(field_from_json(bad), ParseError);
    CHECK_THROWS_AS(bipoly_from_json(Json::object()), ParseError);
}
