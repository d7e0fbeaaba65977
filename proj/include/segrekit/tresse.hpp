#pragma once

#include "segrekit/p0ode.hpp"

#include <map>
#include <utility>

namespace segrekit {

// Polynomial in (y, y1) with Laurent coefficients in the independent variable x.
class Poly2 {
public:
    using Key = std::pair<int, int>;  // (deg y, deg y1)

    Poly2() = default;
    static Poly2 term(const ULaurent& c, int dy, int dy1);

    const std::map<Key, ULaurent>& terms() const { return terms_; }
    ULaurent coeff(int dy, int dy1) const;
    void add(int dy, int dy1, const ULaurent& c);

    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Poly2& a, const GaussRational& c);

    Poly2 d_x() const;
    Poly2 d_y() const;
    Poly2 d_y1() const;

    // every coefficient vanishes on its known range
    bool is_zero() const;
    // smallest coefficient truncation; kExact for an exact polynomial
    int precision() const;
    std::string str() const;

private:
    std::map<Key, ULaurent> terms_;
};

// right-hand side Phi(x, y, y1) of y'' = Phi
struct Ode2Poly {
    Poly2 Phi;
};

Ode2Poly ode_rhs(const P0Ode& ode);

enum class TresseWhich { L1, L2 };

// D = d_x + y1 d_y + Phi d_y1
Poly2 total_derivative(const Ode2Poly& ode, const Poly2& P);
Poly2 tresse(const Ode2Poly& ode, TresseWhich which);

}  // namespace segrekit
