#include "segrekit/p0ode.hpp"

#include "segrekit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace segrekit {

P0Ode P0Ode::flat(int m, int trunc)
{
    P0Ode o;
    o.m = m;
    o.A = o.B = o.C = o.D = o.E = o.F = USeries(trunc, "w");
    return o;
}

int P0Ode::trunc() const
{
    return std::min({A.trunc(), B.trunc(), C.trunc(), D.trunc(), E.trunc(), F.trunc()});
}

std::string P0Ode::str() const
{
    std::ostringstream os;
    os << "m=" << m << "\n  A = " << A.str() << "\n  B = " << B.str() << "\n  C = " << C.str()
       << "\n  D = " << D.str() << "\n  E = " << E.str() << "\n  F = " << F.str();
    return os.str();
}

USeries relation_C(const USeries& A) { return (A * A) * GaussRational::frac(-1, 9); }

USeries relation_D(const USeries& A, const USeries& B, int m)
{
    USeries t = A.derivative().shift(m) - A.shift(m - 1) * GaussRational(m) - A * B;
    return t * GaussRational::frac(1, 3);
}

P0Ode complete_p0(int m, const USeries& A, const USeries& B, const USeries& E, const USeries& F)
{
    if (m < 1)
        throw DomainError("singularity order must be positive");
    P0Ode o;
    o.m = m;
    o.A = A;
    o.B = B;
    o.E = E;
    o.F = F;
    int t = std::min({A.trunc(), B.trunc(), E.trunc(), F.trunc()});
    o.C = relation_C(A).truncated(t);
    o.D = relation_D(A, B, m).truncated(t);
    return o;
}

namespace {

void check(std::vector<RelationViolation>& out, const char* name, const USeries& have,
           const USeries& want)
{
    auto d = have.first_difference(want);
    if (d)
        out.push_back({name, *d, have.coeff(*d) - want.coeff(*d)});
}

}  // namespace

std::vector<RelationViolation> validate_p0(const P0Ode& ode)
{
    std::vector<RelationViolation> out;
    check(out, "C", ode.C, relation_C(ode.A));
    check(out, "D", ode.D, relation_D(ode.A, ode.B, ode.m));
    return out;
}

P0Ode conjugate_ode(const P0Ode& ode)
{
    P0Ode o = ode;
    o.A = ode.A.conj();
    o.B = ode.B.conj();
    o.C = ode.C.conj();
    o.D = ode.D.conj();
    o.E = ode.E.conj();
    o.F = ode.F.conj();
    return o;
}

InverseOde inverse_ode(const P0Ode& ode)
{
    return InverseOde{ode.m, ode.A, ode.B, ode.C, ode.D, ode.E, ode.F};
}

std::string InverseOde::str() const
{
    std::ostringstream os;
    os << "w'' = -((" << A.str() << ")*z + (" << B.str() << ")) (w')^2 / w^" << m << " - (("
       << C.str() << ")*z^3 + (" << D.str() << ")*z^2 + (" << E.str() << ")*z + (" << F.str()
       << ")) (w')^3 / w^" << 2 * m;
    return os.str();
}

namespace {

bool divisible(const USeries& s, int k) { return s.is_zero() || s.valuation() >= k; }

}  // namespace

P0Ode singularity_order(const P0Ode& raw)
{
    if (raw.m < 1)
        throw DomainError("claimed singularity order must be positive");
    for (int mm = 1; mm <= raw.m; ++mm) {
        int s = raw.m - mm;
        if (!divisible(raw.A, s) || !divisible(raw.B, s))
            continue;
        if (!divisible(raw.C, 2 * s) || !divisible(raw.D, 2 * s) || !divisible(raw.E, 2 * s) ||
            !divisible(raw.F, 2 * s))
            continue;
        P0Ode o;
        o.m = mm;
        o.A = raw.A.divide_by_power(s);
        o.B = raw.B.divide_by_power(s);
        o.C = raw.C.divide_by_power(2 * s);
        o.D = raw.D.divide_by_power(2 * s);
        o.E = raw.E.divide_by_power(2 * s);
        o.F = raw.F.divide_by_power(2 * s);
        return o;
    }
    return raw;
}

GeneralP0 to_general(const P0Ode& ode)
{
    auto over = [](const USeries& s, int p) { return ULaurent(s, p); };
    return GeneralP0{over(ode.B, ode.m), over(ode.A, ode.m),     over(ode.F, 2 * ode.m),
                     over(ode.E, 2 * ode.m), over(ode.D, 2 * ode.m), over(ode.C, 2 * ode.m)};
}

std::vector<RelationViolation> validate_general(const GeneralP0& g)
{
    std::vector<RelationViolation> out;
    ULaurent want3 = g.p1 * g.p1 * GaussRational::frac(-1, 9);
    ULaurent want2 = (g.p1.derivative() - g.p0 * g.p1) * GaussRational::frac(1, 3);
    if (auto d = g.q3.first_difference(want3))
        out.push_back({"q3", *d, g.q3.coeff(*d) - want3.coeff(*d)});
    if (auto d = g.q2.first_difference(want2))
        out.push_back({"q2", *d, g.q2.coeff(*d) - want2.coeff(*d)});
    return out;
}

Json to_json(const P0Ode& ode)
{
    return Json{{"m", ode.m},           {"A", to_json(ode.A)}, {"B", to_json(ode.B)},
                {"C", to_json(ode.C)}, {"D", to_json(ode.D)}, {"E", to_json(ode.E)},
                {"F", to_json(ode.F)}};
}

P0Ode p0_from_json(const Json& j)
{
    try {
        P0Ode o;
        o.m = j.at("m").get<int>();
        if (o.m < 1)
            throw ParseError("singularity order must be positive");
        o.A = series_from_json(j.at("A"));
        o.B = series_from_json(j.at("B"));
        o.C = series_from_json(j.at("C"));
        o.D = series_from_json(j.at("D"));
        o.E = series_from_json(j.at("E"));
        o.F = series_from_json(j.at("F"));
        for (const USeries* s : {&o.A, &o.B, &o.C, &o.D, &o.E, &o.F})
            if (s->var() != "w")
                throw ParseError("ODE coefficients must be series in w");
        return o;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed ODE record: ") + e.what());
    }
}

}  // namespace segrekit
