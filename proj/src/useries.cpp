#include "segrekit/useries.hpp"

#include "segrekit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace segrekit {

USeries::USeries(int trunc, std::string var) : var_(std::move(var)), trunc_(std::max(trunc, 0)) {}

USeries::USeries(const GaussRational& c, int trunc, std::string var)
    : USeries(trunc, std::move(var))
{
    set(0, c);
}

USeries USeries::monomial(const GaussRational& c, int deg, int trunc, std::string var)
{
    if (deg < 0)
        throw StructuralError("negative degree in power series");
    USeries s(trunc, std::move(var));
    s.set(deg, c);
    return s;
}

USeries USeries::from_coeffs(const std::vector<GaussRational>& cs, int trunc, std::string var)
{
    USeries s(trunc, std::move(var));
    for (size_t d = 0; d < cs.size(); ++d)
        s.set(static_cast<int>(d), cs[d]);
    return s;
}

GaussRational USeries::coeff(int d) const
{
    if (d < 0)
        return {};
    if (d >= trunc_)
        throw DomainError("coefficient of " + var_ + "^" + std::to_string(d) +
                          " lies beyond truncation " + std::to_string(trunc_));
    auto it = terms_.find(d);
    return it == terms_.end() ? GaussRational() : it->second;
}

void USeries::set(int d, const GaussRational& c)
{
    if (d < 0)
        throw StructuralError("negative degree in power series");
    if (d >= trunc_)
        return;
    if (c.is_zero())
        terms_.erase(d);
    else
        terms_[d] = c;
}

void USeries::add_to(int d, const GaussRational& c)
{
    if (d < 0 || d >= trunc_ || c.is_zero())
        return;
    auto [it, fresh] = terms_.try_emplace(d, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

int USeries::valuation() const { return terms_.empty() ? trunc_ : terms_.begin()->first; }

int USeries::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

bool USeries::is_real() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second.is_real(); });
}

USeries USeries::truncated(int n) const
{
    USeries out(std::min(n, trunc_), var_);
    for (const auto& [d, c] : terms_) {
        if (d >= out.trunc_)
            break;
        out.terms_.emplace(d, c);
    }
    return out;
}

USeries USeries::renamed(std::string var) const
{
    USeries out = *this;
    out.var_ = std::move(var);
    return out;
}

void USeries::check_var(const USeries& o) const
{
    if (var_ != o.var_)
        throw StructuralError("variable mismatch: " + var_ + " vs " + o.var_);
}

void USeries::prune()
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first >= trunc_ || it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

USeries& USeries::operator+=(const USeries& o)
{
    check_var(o);
    trunc_ = std::min(trunc_, o.trunc_);
    for (const auto& [d, c] : o.terms_) {
        if (d >= trunc_)
            break;
        terms_[d] += c;
    }
    prune();
    return *this;
}

USeries& USeries::operator-=(const USeries& o)
{
    check_var(o);
    trunc_ = std::min(trunc_, o.trunc_);
    for (const auto& [d, c] : o.terms_) {
        if (d >= trunc_)
            break;
        terms_[d] -= c;
    }
    prune();
    return *this;
}

USeries& USeries::operator*=(const GaussRational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.second *= c;
    return *this;
}

USeries USeries::operator-() const
{
    USeries out = *this;
    for (auto& t : out.terms_)
        t.second = -t.second;
    return out;
}

USeries operator*(const USeries& a, const USeries& b)
{
    a.check_var(b);
    int t = std::min(add_trunc(a.trunc_, b.valuation()), add_trunc(b.trunc_, a.valuation()));
    USeries out(t, a.var_);
    for (const auto& [da, ca] : a.terms_) {
        if (da >= t)
            break;
        for (const auto& [db, cb] : b.terms_) {
            int d = da + db;
            if (d >= t)
                break;
            out.terms_[d].add_product(ca, cb);
        }
    }
    out.prune();
    return out;
}

USeries USeries::derivative() const
{
    USeries out(exact() ? kExact : std::max(trunc_ - 1, 0), var_);
    for (const auto& [d, c] : terms_)
        if (d > 0)
            out.set(d - 1, c * GaussRational(d));
    return out;
}

USeries USeries::integral() const
{
    USeries out(add_trunc(trunc_, 1), var_);
    for (const auto& [d, c] : terms_)
        out.set(d + 1, c * GaussRational::frac(1, d + 1));
    return out;
}

USeries USeries::shift(int k) const
{
    if (k < 0)
        return divide_by_power(-k);
    USeries out(add_trunc(trunc_, k), var_);
    for (const auto& [d, c] : terms_)
        out.terms_.emplace(d + k, c);
    return out;
}

USeries USeries::divide_by_power(int k) const
{
    if (k < 0)
        return shift(-k);
    if (!terms_.empty() && terms_.begin()->first < k)
        throw DomainError("series not divisible by " + var_ + "^" + std::to_string(k));
    USeries out(exact() ? kExact : std::max(trunc_ - k, 0), var_);
    for (const auto& [d, c] : terms_)
        out.terms_.emplace(d - k, c);
    return out;
}

USeries USeries::conj() const
{
    USeries out = *this;
    for (auto& t : out.terms_)
        t.second = t.second.conj();
    return out;
}

int USeries::expansion_bound(int n, const char* what) const
{
    int t = std::min(n, trunc_);
    if (t >= kExact)
        throw DomainError(std::string(what) + " of an exact series needs a truncation order");
    return t;
}

USeries USeries::inverse(int n) const
{
    GaussRational c0 = terms_.empty() || terms_.begin()->first != 0 ? GaussRational()
                                                                   : terms_.begin()->second;
    if (trunc_ == 0)
        throw NonUnitError("inverse of a series with no known coefficients");
    if (c0.is_zero())
        throw NonUnitError("inverse of a series with zero constant term");
    GaussRational r0 = c0.inverse();
    if (degree() == 0 && std::min(n, trunc_) >= kExact)
        return USeries(r0, kExact, var_);
    int t = expansion_bound(n, "inverse");
    std::vector<GaussRational> r(t);
    r[0] = r0;
    for (int k = 1; k < t; ++k) {
        GaussRational acc;
        for (const auto& [j, sj] : terms_) {
            if (j == 0)
                continue;
            if (j > k)
                break;
            acc.add_product(sj, r[k - j]);
        }
        r[k] = -(acc * r0);
    }
    return from_coeffs(r, t, var_);
}

USeries USeries::exp(int n) const
{
    if (!terms_.empty() && terms_.begin()->first == 0)
        throw DomainError("exp requires zero constant term");
    if (terms_.empty())
        return USeries(GaussRational(1), std::min(n, trunc_), var_);
    int t = expansion_bound(n, "exp");
    std::vector<GaussRational> r(t);
    r[0] = 1;
    for (int k = 1; k < t; ++k) {
        GaussRational acc;
        for (const auto& [j, sj] : terms_) {
            if (j > k)
                break;
            acc.add_product(sj * GaussRational(j), r[k - j]);
        }
        r[k] = acc * GaussRational::frac(1, k);
    }
    return from_coeffs(r, t, var_);
}

USeries USeries::log(int n) const
{
    if (trunc_ == 0 || !coeff(0).is_one())
        throw DomainError("log requires constant term 1");
    if (degree() == 0)
        return USeries(std::min(n, trunc_), var_);
    int t = expansion_bound(n, "log");
    std::vector<GaussRational> l(t);
    for (int k = 1; k < t; ++k) {
        GaussRational acc;
        for (int j = 1; j < k; ++j) {
            if (l[j].is_zero())
                continue;
            auto it = terms_.find(k - j);
            if (it != terms_.end())
                acc.add_product(l[j] * GaussRational(j), it->second);
        }
        auto it = terms_.find(k);
        GaussRational sk = it == terms_.end() ? GaussRational() : it->second;
        l[k] = sk - acc * GaussRational::frac(1, k);
    }
    return from_coeffs(l, t, var_);
}

USeries USeries::pow(const Rational& e, int n) const
{
    if (trunc_ == 0 || !coeff(0).is_one())
        throw DomainError("rational power requires constant term 1");
    if (e.get_den() == 1 && e.get_num().fits_slong_p())
        return pow(static_cast<int>(e.get_num().get_si()), n);
    if (degree() == 0)
        return USeries(GaussRational(1), std::min(n, trunc_), var_);
    int t = expansion_bound(n, "power");
    std::vector<GaussRational> r(t);
    r[0] = 1;
    Rational e1 = e + 1;
    for (int k = 1; k < t; ++k) {
        GaussRational acc;
        for (const auto& [j, sj] : terms_) {
            if (j == 0)
                continue;
            if (j > k)
                break;
            Rational w = e1 * j - k;
            acc.add_product(sj * w, r[k - j]);
        }
        r[k] = acc * GaussRational::frac(1, k);
    }
    return from_coeffs(r, t, var_);
}

USeries USeries::pow(int e, int n) const
{
    if (e < 0)
        return inverse(n).pow(-e, n);
    USeries base = n < trunc_ ? truncated(n) : *this;
    USeries out(GaussRational(1), kExact, var_);
    while (e > 0) {
        if (e & 1)
            out = out * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return n < out.trunc_ ? out.truncated(n) : out;
}

USeries USeries::compose(const USeries& t) const
{
    int vt = t.valuation();
    int out_trunc;
    if (exact()) {
        out_trunc = kExact;
    } else {
        if (vt == 0)
            throw DomainError(
                "composition would require infinitely many terms: inner series has a constant term");
        long long r = static_cast<long long>(trunc_) * vt;
        out_trunc = r >= kExact ? kExact : static_cast<int>(r);
    }
    USeries out(out_trunc, t.var_);
    USeries power(GaussRational(1), kExact, t.var_);
    int prev = 0;
    for (const auto& [d, c] : terms_) {
        for (int k = prev; k < d; ++k) {
            power = power * t;
            if (power.trunc() > out.trunc())
                power = power.truncated(out.trunc());
        }
        prev = d;
        out += power * c;
    }
    return out;
}

USeries USeries::reversion() const
{
    if (coeff(0) != GaussRational() || trunc_ < 2 || coeff(1).is_zero())
        throw DomainError("reversion requires a series of the form a*w + O(w^2), a != 0");
    GaussRational a = coeff(1);
    if (degree() == 1)
        return monomial(a.inverse(), 1, trunc_, var_);
    int t = expansion_bound(kExact, "reversion");
    // Lagrange: h_n = [w^{n-1}] (w/g)^n / n
    USeries r = divide_by_power(1).inverse();
    USeries out(t, var_);
    USeries rn(GaussRational(1), kExact, var_);
    for (int n = 1; n < t; ++n) {
        rn = rn * r;
        out.set(n, rn.coeff(n - 1) * GaussRational::frac(1, n));
    }
    return out;
}

std::optional<int> USeries::first_difference(const USeries& o) const
{
    check_var(o);
    int t = std::min(trunc_, o.trunc_);
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    while (a != terms_.end() || b != o.terms_.end()) {
        int da = a == terms_.end() ? kExact : a->first;
        int db = b == o.terms_.end() ? kExact : b->first;
        int d = std::min(da, db);
        if (d >= t)
            return std::nullopt;
        if (da != db)
            return d;
        if (a->second != b->second)
            return d;
        ++a;
        ++b;
    }
    return std::nullopt;
}

std::string USeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        bool simple = c.is_real() || sgn(c.re()) == 0;
        if (d == 0)
            os << c;
        else if (c.is_one())
            os << var_;
        else if (simple)
            os << c << "*" << var_;
        else
            os << "(" << c << ")*" << var_;
        if (d > 1)
            os << "^" << d;
    }
    if (first)
        os << "0";
    if (!exact())
        os << " + O(" << var_ << "^" << trunc_ << ")";
    return os.str();
}

bool operator==(const USeries& a, const USeries& b)
{
    return a.var() == b.var() && a.trunc() == b.trunc() && a.terms() == b.terms();
}

}  // namespace segrekit
