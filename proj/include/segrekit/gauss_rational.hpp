#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace segrekit {

using Rational = mpq_class;

// Exact element of Q(i). Both parts are kept canonical by gmp.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(long n) : re_(n), im_(0) {}
    GaussRational(const Rational& re) : re_(re), im_(0) { re_.canonicalize(); }
    GaussRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }
    static GaussRational frac(long num, long den);

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }
    bool is_one() const { return sgn(im_) == 0 && re_ == 1; }

    GaussRational conj() const { return GaussRational(re_, -im_); }
    Rational norm2() const { return re_ * re_ + im_ * im_; }
    GaussRational inverse() const;

    GaussRational& operator+=(const GaussRational& o);
    GaussRational& operator-=(const GaussRational& o);
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);
    GaussRational& operator*=(const Rational& q);

    // this += a*b without temporaries for the real parts
    void add_product(const GaussRational& a, const GaussRational& b);

    GaussRational operator-() const { return GaussRational(-re_, -im_); }

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend GaussRational operator*(GaussRational a, const Rational& q) { return a *= q; }
    friend GaussRational operator*(const Rational& q, GaussRational a) { return a *= q; }

    friend bool operator==(const GaussRational& a, const GaussRational& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    // "3/2-1/4i", "i", "-2i", "0"
    std::string str() const;
    static GaussRational parse(const std::string& text);

private:
    Rational re_;
    Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussRational& x);

// binomial(e, k) for rational e
Rational binomial(const Rational& e, long k);

}  // namespace segrekit
