#pragma once

#include "segrekit/useries.hpp"

namespace segrekit {

// body / var^pole with the pole kept minimal.
class ULaurent {
public:
    explicit ULaurent(int abs_trunc = kExact, std::string var = "w");
    ULaurent(USeries body, int pole = 0);

    static ULaurent monomial(const GaussRational& c, int deg, int abs_trunc = kExact,
                             std::string var = "w");

    int pole() const { return pole_; }
    const USeries& body() const { return body_; }
    const std::string& var() const { return body_.var(); }
    // coefficients of degree >= trunc() are unknown
    int trunc() const { return body_.exact() ? kExact : body_.trunc() - pole_; }
    bool exact() const { return body_.exact(); }

    GaussRational coeff(int d) const;
    bool is_zero() const { return body_.is_zero(); }
    int valuation() const;  // absolute; trunc() for zero
    // (degree, coefficient) pairs in absolute degrees
    std::vector<std::pair<int, GaussRational>> terms() const;

    ULaurent truncated(int abs_trunc) const;

    ULaurent& operator+=(const ULaurent& o);
    ULaurent& operator-=(const ULaurent& o);
    friend ULaurent operator+(ULaurent a, const ULaurent& b) { return a += b; }
    friend ULaurent operator-(ULaurent a, const ULaurent& b) { return a -= b; }
    friend ULaurent operator*(const ULaurent& a, const ULaurent& b);
    friend ULaurent operator*(const ULaurent& a, const GaussRational& c);
    friend ULaurent operator*(const GaussRational& c, const ULaurent& a) { return a * c; }
    ULaurent operator-() const;

    ULaurent derivative() const;
    ULaurent conj() const;
    ULaurent shift(int k) const;  // times var^k, any sign
    ULaurent inverse(int n = kExact) const;
    ULaurent pow(int e, int n = kExact) const;

    // as a power series; throws DomainError if a pole remains
    USeries to_series() const;

    std::optional<int> first_difference(const ULaurent& o) const;
    std::string str() const;

private:
    void normalize();

    int pole_ = 0;
    USeries body_;
};

bool operator==(const ULaurent& a, const ULaurent& b);

}  // namespace segrekit
