#include "segrekit/ulaurent.hpp"

#include "segrekit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace segrekit {

ULaurent::ULaurent(int abs_trunc, std::string var) : body_(0, var)
{
    if (abs_trunc >= 0) {
        body_ = USeries(abs_trunc, std::move(var));
    } else {
        pole_ = -abs_trunc;
        body_ = USeries(0, std::move(var));
    }
}

ULaurent::ULaurent(USeries body, int pole) : pole_(pole), body_(std::move(body))
{
    if (pole_ < 0) {
        body_ = body_.shift(-pole_);
        pole_ = 0;
    }
    normalize();
}

ULaurent ULaurent::monomial(const GaussRational& c, int deg, int abs_trunc, std::string var)
{
    if (deg >= 0)
        return ULaurent(USeries::monomial(c, deg, abs_trunc, std::move(var)), 0);
    return ULaurent(USeries::monomial(c, 0, add_trunc(abs_trunc, -deg), std::move(var)), -deg);
}

void ULaurent::normalize()
{
    if (pole_ == 0)
        return;
    int v = body_.valuation();
    int k = std::min(v, pole_);
    if (k > 0) {
        body_ = body_.divide_by_power(k);
        pole_ -= k;
    }
}

GaussRational ULaurent::coeff(int d) const
{
    if (d >= trunc())
        throw DomainError("Laurent coefficient beyond truncation");
    if (d + pole_ < 0)
        return {};
    return body_.coeff(d + pole_);
}

int ULaurent::valuation() const { return body_.valuation() - pole_; }

std::vector<std::pair<int, GaussRational>> ULaurent::terms() const
{
    std::vector<std::pair<int, GaussRational>> out;
    out.reserve(body_.terms().size());
    for (const auto& [d, c] : body_.terms())
        out.emplace_back(d - pole_, c);
    return out;
}

ULaurent ULaurent::truncated(int abs_trunc) const
{
    if (abs_trunc >= trunc())
        return *this;
    return ULaurent(body_.truncated(std::max(abs_trunc + pole_, 0)), pole_);
}

ULaurent& ULaurent::operator+=(const ULaurent& o)
{
    int p = std::max(pole_, o.pole_);
    body_ = body_.shift(p - pole_) + o.body_.shift(p - o.pole_);
    pole_ = p;
    normalize();
    return *this;
}

ULaurent& ULaurent::operator-=(const ULaurent& o)
{
    int p = std::max(pole_, o.pole_);
    body_ = body_.shift(p - pole_) - o.body_.shift(p - o.pole_);
    pole_ = p;
    normalize();
    return *this;
}

ULaurent operator*(const ULaurent& a, const ULaurent& b)
{
    return ULaurent(a.body_ * b.body_, a.pole_ + b.pole_);
}

ULaurent operator*(const ULaurent& a, const GaussRational& c)
{
    return ULaurent(a.body_ * c, a.pole_);
}

ULaurent ULaurent::operator-() const { return ULaurent(-body_, pole_); }

ULaurent ULaurent::derivative() const
{
    if (pole_ == 0)
        return ULaurent(body_.derivative(), 0);
    USeries b = body_.derivative().shift(1) - body_ * GaussRational(pole_);
    return ULaurent(b, pole_ + 1);
}

ULaurent ULaurent::conj() const { return ULaurent(body_.conj(), pole_); }

ULaurent ULaurent::shift(int k) const
{
    int p = pole_ - k;
    if (p >= 0)
        return ULaurent(body_, p);
    return ULaurent(body_.shift(-p), 0);
}

ULaurent ULaurent::inverse(int n) const
{
    if (body_.is_zero())
        throw NonUnitError("inverse of zero Laurent series");
    int s = body_.valuation();
    int v = s - pole_;
    USeries u = body_.divide_by_power(s);
    int bound = n >= kExact ? kExact : add_trunc(n, v);
    return ULaurent(u.inverse(bound), 0).shift(-v);
}

ULaurent ULaurent::pow(int e, int n) const
{
    if (e < 0)
        return inverse(n).pow(-e, n);
    ULaurent out(USeries(GaussRational(1), kExact, var()), 0);
    ULaurent base = *this;
    while (e > 0) {
        if (e & 1)
            out = out * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return n < out.trunc() ? out.truncated(n) : out;
}

USeries ULaurent::to_series() const
{
    if (pole_ > 0)
        throw DomainError("Laurent series has a pole of order " + std::to_string(pole_));
    return body_;
}

std::optional<int> ULaurent::first_difference(const ULaurent& o) const
{
    ULaurent d = *this - o;
    if (d.is_zero())
        return std::nullopt;
    return d.valuation();
}

std::string ULaurent::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms()) {
        if (!first)
            os << " + ";
        first = false;
        bool simple = c.is_real() || sgn(c.re()) == 0;
        if (d == 0)
            os << c;
        else if (c.is_one())
            os << var();
        else if (simple)
            os << c << "*" << var();
        else
            os << "(" << c << ")*" << var();
        if (d != 0 && d != 1)
            os << "^" << d;
    }
    if (first)
        os << "0";
    if (!exact())
        os << " + O(" << var() << "^" << trunc() << ")";
    return os.str();
}

bool operator==(const ULaurent& a, const ULaurent& b)
{
    return a.pole() == b.pole() && a.body() == b.body();
}

}  // namespace segrekit
