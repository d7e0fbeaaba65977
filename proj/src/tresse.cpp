#include "segrekit/tresse.hpp"

#include <algorithm>
#include <sstream>

namespace segrekit {

Poly2 Poly2::term(const ULaurent& c, int dy, int dy1)
{
    Poly2 p;
    p.add(dy, dy1, c);
    return p;
}

ULaurent Poly2::coeff(int dy, int dy1) const
{
    auto it = terms_.find({dy, dy1});
    return it == terms_.end() ? ULaurent() : it->second;
}

void Poly2::add(int dy, int dy1, const ULaurent& c)
{
    auto it = terms_.find({dy, dy1});
    if (it == terms_.end())
        terms_.emplace(Key{dy, dy1}, c);
    else
        it->second += c;
}

Poly2& Poly2::operator+=(const Poly2& o)
{
    for (const auto& [k, c] : o.terms_)
        add(k.first, k.second, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o)
{
    for (const auto& [k, c] : o.terms_)
        add(k.first, k.second, -c);
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b)
{
    Poly2 out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

Poly2 operator*(const Poly2& a, const GaussRational& c)
{
    Poly2 out;
    for (const auto& [k, v] : a.terms_)
        out.add(k.first, k.second, v * c);
    return out;
}

Poly2 Poly2::d_x() const
{
    Poly2 out;
    for (const auto& [k, c] : terms_)
        out.add(k.first, k.second, c.derivative());
    return out;
}

Poly2 Poly2::d_y() const
{
    Poly2 out;
    for (const auto& [k, c] : terms_)
        if (k.first > 0)
            out.add(k.first - 1, k.second, c * GaussRational(k.first));
    return out;
}

Poly2 Poly2::d_y1() const
{
    Poly2 out;
    for (const auto& [k, c] : terms_)
        if (k.second > 0)
            out.add(k.first, k.second - 1, c * GaussRational(k.second));
    return out;
}

bool Poly2::is_zero() const
{
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_zero(); });
}

int Poly2::precision() const
{
    int p = kExact;
    for (const auto& [k, c] : terms_)
        p = std::min(p, c.trunc());
    return p;
}

std::string Poly2::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (c.is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k.first)
            os << "*y^" << k.first;
        if (k.second)
            os << "*y1^" << k.second;
    }
    if (first)
        os << "0";
    return os.str();
}

Ode2Poly ode_rhs(const P0Ode& ode)
{
    int m = ode.m;
    Poly2 phi;
    phi.add(1, 1, ULaurent(ode.A, m));
    phi.add(0, 1, ULaurent(ode.B, m));
    phi.add(3, 0, ULaurent(ode.C, 2 * m));
    phi.add(2, 0, ULaurent(ode.D, 2 * m));
    phi.add(1, 0, ULaurent(ode.E, 2 * m));
    phi.add(0, 0, ULaurent(ode.F, 2 * m));
    return Ode2Poly{phi};
}

Poly2 total_derivative(const Ode2Poly& ode, const Poly2& P)
{
    Poly2 y1 = Poly2::term(ULaurent(USeries(GaussRational(1), kExact)), 0, 1);
    return P.d_x() + y1 * P.d_y() + ode.Phi * P.d_y1();
}

Poly2 tresse(const Ode2Poly& ode, TresseWhich which)
{
    const Poly2& F = ode.Phi;
    if (which == TresseWhich::L1)
        return F.d_y1().d_y1().d_y1().d_y1();
    Poly2 Fp = F.d_y1();
    Poly2 Fpp = Fp.d_y1();
    Poly2 Fy = F.d_y();
    Poly2 Fyp = Fy.d_y1();
    Poly2 Fyy = Fy.d_y();
    Poly2 DFpp = total_derivative(ode, Fpp);
    Poly2 L = total_derivative(ode, DFpp);
    L -= total_derivative(ode, Fyp) * GaussRational(4);
    L -= Fp * DFpp;
    L += Fp * Fyp * GaussRational(4);
    L -= Fy * Fpp * GaussRational(3);
    L += Fyy * GaussRational(6);
    return L;
}

}  // namespace segrekit
