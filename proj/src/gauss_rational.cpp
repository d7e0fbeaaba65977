#include "segrekit/gauss_rational.hpp"

#include "segrekit/errors.hpp"

#include <cctype>
#include <ostream>

namespace segrekit {

GaussRational GaussRational::frac(long num, long den)
{
    if (den == 0)
        throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return GaussRational(q);
}

GaussRational GaussRational::inverse() const
{
    if (is_zero())
        throw NonUnitError("division by zero");
    if (is_real())
        return GaussRational(Rational(1) / re_);
    Rational n = norm2();
    return GaussRational(re_ / n, -im_ / n);
}

GaussRational& GaussRational::operator+=(const GaussRational& o)
{
    re_ += o.re_;
    if (sgn(o.im_) != 0)
        im_ += o.im_;
    return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o)
{
    re_ -= o.re_;
    if (sgn(o.im_) != 0)
        im_ -= o.im_;
    return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o)
{
    if (o.is_real()) {
        re_ *= o.re_;
        if (sgn(im_) != 0)
            im_ *= o.re_;
        return *this;
    }
    if (is_real()) {
        im_ = re_ * o.im_;
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    return *this;
}

GaussRational& GaussRational::operator*=(const Rational& q)
{
    re_ *= q;
    if (sgn(im_) != 0)
        im_ *= q;
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o)
{
    if (o.is_real()) {
        if (sgn(o.re_) == 0)
            throw NonUnitError("division by zero");
        re_ /= o.re_;
        if (sgn(im_) != 0)
            im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

void GaussRational::add_product(const GaussRational& a, const GaussRational& b)
{
    bool ar = a.is_real(), br = b.is_real();
    if (ar && br) {
        re_ += a.re_ * b.re_;
        return;
    }
    if (ar) {
        re_ += a.re_ * b.re_;
        im_ += a.re_ * b.im_;
        return;
    }
    if (br) {
        re_ += a.re_ * b.re_;
        im_ += a.im_ * b.re_;
        return;
    }
    re_ += a.re_ * b.re_ - a.im_ * b.im_;
    im_ += a.re_ * b.im_ + a.im_ * b.re_;
}

namespace {

std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace

std::string GaussRational::str() const
{
    if (is_real())
        return rational_str(re_);
    std::string imag;
    if (im_ == 1)
        imag = "i";
    else if (im_ == -1)
        imag = "-i";
    else
        imag = rational_str(im_) + "i";
    if (sgn(re_) == 0)
        return imag;
    std::string out = rational_str(re_);
    if (sgn(im_) > 0)
        out += "+";
    return out + imag;
}

std::ostream& operator<<(std::ostream& os, const GaussRational& x) { return os << x.str(); }

namespace {

struct ScalarReader {
    const std::string& s;
    size_t pos = 0;

    bool eof() const { return pos >= s.size(); }
    char peek() const { return eof() ? '\0' : s[pos]; }

    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParseError("bad scalar '" + s + "': " + why);
    }

    std::string digits()
    {
        size_t start = pos;
        while (!eof() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        return s.substr(start, pos - start);
    }

    // unsigned term: rational [i] | i
    GaussRational term()
    {
        if (peek() == 'i') {
            ++pos;
            return GaussRational::i();
        }
        std::string num = digits();
        if (num.empty())
            fail("expected digits");
        mpz_class n(num), d(1);
        if (peek() == '/') {
            ++pos;
            std::string den = digits();
            if (den.empty())
                fail("expected denominator");
            d = mpz_class(den);
            if (d == 0)
                fail("zero denominator");
        }
        Rational q(n, d);
        q.canonicalize();
        if (peek() == 'i') {
            ++pos;
            return GaussRational(Rational(0), q);
        }
        return GaussRational(q);
    }
};

}  // namespace

GaussRational GaussRational::parse(const std::string& text)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    ScalarReader r{s};
    if (s.empty())
        r.fail("empty");
    GaussRational acc;
    bool first = true;
    while (!r.eof()) {
        int sign = 1;
        if (r.peek() == '+' || r.peek() == '-') {
            sign = r.peek() == '-' ? -1 : 1;
            ++r.pos;
        } else if (!first) {
            r.fail("expected sign");
        }
        GaussRational t = r.term();
        if (sign < 0)
            t = -t;
        acc += t;
        first = false;
    }
    return acc;
}

Rational binomial(const Rational& e, long k)
{
    Rational out(1);
    for (long j = 0; j < k; ++j) {
        out *= (e - j);
        out /= (j + 1);
    }
    return out;
}

}  // namespace segrekit
