#include "segrekit/triseries.hpp"

#include "segrekit/errors.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace segrekit {

TriSeries::TriSeries(Truncs truncs, Labels labels) : truncs_(truncs), labels_(std::move(labels))
{
    for (int& t : truncs_)
        t = std::max(t, 0);
}

TriSeries TriSeries::constant(const GaussRational& c, Truncs truncs)
{
    TriSeries s(truncs);
    s.set({0, 0, 0}, c);
    return s;
}

TriSeries TriSeries::monomial(const GaussRational& c, Index e, Truncs truncs)
{
    TriSeries s(truncs);
    s.set(e, c);
    return s;
}

TriSeries TriSeries::embed(const USeries& s, int slot, Truncs truncs)
{
    truncs[slot] = std::min(truncs[slot], s.trunc());
    TriSeries out(truncs);
    for (const auto& [d, c] : s.terms()) {
        Index e{0, 0, 0};
        e[slot] = d;
        out.set(e, c);
    }
    return out;
}

bool TriSeries::exact() const
{
    return truncs_[0] >= kExact && truncs_[1] >= kExact && truncs_[2] >= kExact;
}

GaussRational TriSeries::coeff(const Index& e) const
{
    for (int x = 0; x < 3; ++x) {
        if (e[x] < 0)
            return {};
        if (e[x] >= truncs_[x])
            throw DomainError("TriSeries coefficient beyond truncation in " + labels_[x]);
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? GaussRational() : it->second;
}

namespace {

bool inside(const TriSeries::Index& e, const TriSeries::Truncs& t)
{
    return e[0] >= 0 && e[1] >= 0 && e[2] >= 0 && e[0] < t[0] && e[1] < t[1] && e[2] < t[2];
}

}  // namespace

void TriSeries::set(const Index& e, const GaussRational& c)
{
    if (e[0] < 0 || e[1] < 0 || e[2] < 0)
        throw StructuralError("negative exponent in TriSeries");
    if (!inside(e, truncs_))
        return;
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

void TriSeries::add_to(const Index& e, const GaussRational& c)
{
    if (!inside(e, truncs_) || c.is_zero())
        return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

GaussRational TriSeries::constant_term() const
{
    auto it = terms_.find({0, 0, 0});
    return it == terms_.end() ? GaussRational() : it->second;
}

TriSeries::Index TriSeries::valuations() const
{
    Index v = truncs_;
    for (const auto& [e, c] : terms_)
        for (int x = 0; x < 3; ++x)
            v[x] = std::min(v[x], e[x]);
    return v;
}

TriSeries::Index TriSeries::max_degrees() const
{
    Index m{-1, -1, -1};
    for (const auto& [e, c] : terms_)
        for (int x = 0; x < 3; ++x)
            m[x] = std::max(m[x], e[x]);
    return m;
}

std::optional<TriSeries::Index> TriSeries::first_nonzero() const
{
    std::optional<Index> best;
    for (const auto& [e, c] : terms_) {
        if (!best) {
            best = e;
            continue;
        }
        int s = e[0] + e[1] + e[2];
        int b = (*best)[0] + (*best)[1] + (*best)[2];
        if (s < b || (s == b && e < *best))
            best = e;
    }
    return best;
}

TriSeries TriSeries::truncated(const Truncs& t) const
{
    Truncs nt;
    for (int x = 0; x < 3; ++x)
        nt[x] = std::min(truncs_[x], t[x]);
    TriSeries out(nt, labels_);
    for (const auto& [e, c] : terms_)
        if (inside(e, nt))
            out.terms_.emplace_hint(out.terms_.end(), e, c);
    return out;
}

TriSeries TriSeries::relabeled(Labels labels) const
{
    TriSeries out = *this;
    out.labels_ = std::move(labels);
    return out;
}

void TriSeries::check_labels(const TriSeries& o) const
{
    if (labels_ != o.labels_)
        throw StructuralError("TriSeries variable mismatch");
}

void TriSeries::prune()
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (!inside(it->first, truncs_) || it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

TriSeries& TriSeries::operator+=(const TriSeries& o)
{
    check_labels(o);
    for (int x = 0; x < 3; ++x)
        truncs_[x] = std::min(truncs_[x], o.truncs_[x]);
    for (const auto& [e, c] : o.terms_)
        if (inside(e, truncs_))
            terms_[e] += c;
    prune();
    return *this;
}

TriSeries& TriSeries::operator-=(const TriSeries& o)
{
    check_labels(o);
    for (int x = 0; x < 3; ++x)
        truncs_[x] = std::min(truncs_[x], o.truncs_[x]);
    for (const auto& [e, c] : o.terms_)
        if (inside(e, truncs_))
            terms_[e] -= c;
    prune();
    return *this;
}

TriSeries& TriSeries::operator*=(const GaussRational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.second *= c;
    return *this;
}

TriSeries TriSeries::operator-() const
{
    TriSeries out = *this;
    for (auto& t : out.terms_)
        t.second = -t.second;
    return out;
}

namespace {

// exact, or a function of one variable that is exact in the other two;
// for such factors valuations are guaranteed and the product box may grow
bool sharp(const TriSeries& s)
{
    int finite = -1;
    for (int x = 0; x < 3; ++x) {
        if (s.truncs()[x] < kExact) {
            if (finite >= 0)
                return false;
            finite = x;
        }
    }
    if (finite < 0)
        return true;
    for (const auto& [e, c] : s.terms())
        for (int x = 0; x < 3; ++x)
            if (x != finite && e[x] != 0)
                return false;
    return true;
}

}  // namespace

TriSeries operator*(const TriSeries& a, const TriSeries& b)
{
    a.check_labels(b);
    TriSeries::Truncs out;
    bool sharp_rule = sharp(a) || sharp(b);
    auto va = a.valuations(), vb = b.valuations();
    for (int x = 0; x < 3; ++x) {
        if (sharp_rule)
            out[x] = std::min(add_trunc(a.truncs_[x], vb[x]), add_trunc(b.truncs_[x], va[x]));
        else
            out[x] = std::min(a.truncs_[x], b.truncs_[x]);
    }
    TriSeries res(out, a.labels_);
    if (a.terms_.empty() || b.terms_.empty())
        return res;
    auto ma = a.max_degrees(), mb = b.max_degrees();
    std::array<long, 3> dim;
    for (int x = 0; x < 3; ++x)
        dim[x] = std::min<long>(out[x], static_cast<long>(ma[x]) + mb[x] + 1);
    if (dim[0] <= 0 || dim[1] <= 0 || dim[2] <= 0)
        return res;
    std::vector<GaussRational> acc(static_cast<size_t>(dim[0] * dim[1] * dim[2]));
    std::vector<char> used(acc.size(), 0);
    for (const auto& [ea, ca] : a.terms_) {
        if (ea[0] >= dim[0] || ea[1] >= dim[1] || ea[2] >= dim[2])
            continue;
        for (const auto& [eb, cb] : b.terms_) {
            long k = ea[0] + eb[0];
            if (k >= dim[0])
                break;
            long l = ea[1] + eb[1];
            long j = ea[2] + eb[2];
            if (l >= dim[1] || j >= dim[2])
                continue;
            size_t pos = static_cast<size_t>((k * dim[1] + l) * dim[2] + j);
            acc[pos].add_product(ca, cb);
            used[pos] = 1;
        }
    }
    for (long k = 0; k < dim[0]; ++k)
        for (long l = 0; l < dim[1]; ++l)
            for (long j = 0; j < dim[2]; ++j) {
                size_t pos = static_cast<size_t>((k * dim[1] + l) * dim[2] + j);
                if (used[pos] && !acc[pos].is_zero())
                    res.terms_.emplace_hint(
                        res.terms_.end(),
                        TriSeries::Index{static_cast<int>(k), static_cast<int>(l), static_cast<int>(j)},
                        std::move(acc[pos]));
            }
    return res;
}

TriSeries TriSeries::mul_eta(const USeries& s) const
{
    return *this * embed(s, 2).relabeled(labels_);
}

TriSeries TriSeries::shift(const Index& e) const
{
    Truncs nt;
    for (int x = 0; x < 3; ++x)
        nt[x] = add_trunc(truncs_[x], e[x]);
    TriSeries out(nt, labels_);
    for (const auto& [f, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), Index{f[0] + e[0], f[1] + e[1], f[2] + e[2]}, c);
    return out;
}

TriSeries TriSeries::div_eta(int k) const
{
    Truncs nt = truncs_;
    if (nt[2] < kExact)
        nt[2] = std::max(nt[2] - k, 0);
    TriSeries out(nt, labels_);
    for (const auto& [e, c] : terms_) {
        if (e[2] < k)
            throw DomainError("TriSeries not divisible by " + labels_[2] + "^" + std::to_string(k));
        out.set({e[0], e[1], e[2] - k}, c);
    }
    return out;
}

TriSeries TriSeries::derivative(int slot) const
{
    Truncs nt = truncs_;
    if (nt[slot] < kExact)
        nt[slot] = std::max(nt[slot] - 1, 0);
    TriSeries out(nt, labels_);
    for (const auto& [e, c] : terms_) {
        if (e[slot] == 0)
            continue;
        Index f = e;
        f[slot] -= 1;
        out.set(f, c * GaussRational(e[slot]));
    }
    return out;
}

TriSeries TriSeries::integral_z() const
{
    Truncs nt = truncs_;
    nt[0] = add_trunc(nt[0], 1);
    TriSeries out(nt, labels_);
    for (const auto& [e, c] : terms_)
        out.set({e[0] + 1, e[1], e[2]}, c * GaussRational::frac(1, e[0] + 1));
    return out;
}

bool TriSeries::nilpotent() const
{
    for (int x = 0; x < 3; ++x) {
        if (truncs_[x] >= kExact)
            continue;
        bool all = std::all_of(terms_.begin(), terms_.end(),
                               [x](const auto& t) { return t.first[x] > 0; });
        if (all)
            return true;
    }
    return terms_.empty();
}

namespace {

int power_cap(const TriSeries& s)
{
    long cap = 1;
    for (int t : s.truncs())
        if (t < kExact)
            cap += t;
    return static_cast<int>(std::min<long>(cap, kExact));
}

}  // namespace

TriSeries TriSeries::exp() const
{
    if (!constant_term().is_zero())
        throw DomainError("exp requires zero constant term");
    if (!nilpotent())
        throw DomainError("exp argument is not nilpotent within the truncation box");
    TriSeries out = constant(GaussRational(1), truncs_).relabeled(labels_);
    TriSeries term = out;
    int cap = power_cap(*this);
    for (int n = 1; n <= cap; ++n) {
        term = term * *this;
        term *= GaussRational::frac(1, n);
        if (term.is_zero())
            break;
        out += term;
    }
    return out;
}

TriSeries TriSeries::log() const
{
    if (!constant_term().is_one())
        throw DomainError("log requires constant term 1");
    TriSeries d = *this - constant(GaussRational(1)).relabeled(labels_);
    if (!d.nilpotent())
        throw DomainError("log argument is not nilpotent within the truncation box");
    TriSeries out(d.truncs_, labels_);
    TriSeries power = constant(GaussRational(1)).relabeled(labels_);
    int cap = power_cap(d);
    for (int n = 1; n <= cap; ++n) {
        power = power * d;
        if (power.is_zero())
            break;
        GaussRational c = GaussRational::frac(n % 2 == 1 ? 1 : -1, n);
        out += power * c;
    }
    return out;
}

TriSeries TriSeries::inverse() const
{
    GaussRational c0 = constant_term();
    if (c0.is_zero())
        throw NonUnitError("inverse of a TriSeries with zero constant term");
    GaussRational r0 = c0.inverse();
    TriSeries d = *this * r0 - constant(GaussRational(1)).relabeled(labels_);
    if (!d.nilpotent())
        throw DomainError("inverse expansion is not finite within the truncation box");
    TriSeries out = constant(GaussRational(1), d.truncs_).relabeled(labels_);
    TriSeries power = constant(GaussRational(1)).relabeled(labels_);
    int cap = power_cap(d);
    for (int n = 1; n <= cap; ++n) {
        power = -(power * d);
        if (power.is_zero())
            break;
        out += power;
    }
    return out * r0;
}

TriSeries TriSeries::pow(int e) const
{
    if (e < 0)
        return inverse().pow(-e);
    TriSeries out = constant(GaussRational(1)).relabeled(labels_);
    TriSeries base = *this;
    while (e > 0) {
        if (e & 1)
            out = out * base;
        e >>= 1;
        if (e > 0)
            base = base * base;
    }
    return out;
}

TriSeries TriSeries::conj() const
{
    TriSeries out = *this;
    for (auto& t : out.terms_)
        t.second = t.second.conj();
    return out;
}

TriSeries TriSeries::swap_z_xi() const
{
    TriSeries out({truncs_[1], truncs_[0], truncs_[2]}, labels_);
    for (const auto& [e, c] : terms_)
        out.terms_.emplace(Index{e[1], e[0], e[2]}, c);
    return out;
}

USeries TriSeries::slice(int k, int l, const std::string& var) const
{
    if (k >= truncs_[0] || l >= truncs_[1])
        throw DomainError("slice (" + std::to_string(k) + "," + std::to_string(l) +
                          ") beyond truncation");
    USeries s(truncs_[2], var);
    auto it = terms_.lower_bound({k, l, 0});
    for (; it != terms_.end() && it->first[0] == k && it->first[1] == l; ++it)
        s.set(it->first[2], it->second);
    return s;
}

void TriSeries::set_slice(int k, int l, const USeries& s)
{
    auto it = terms_.lower_bound({k, l, 0});
    while (it != terms_.end() && it->first[0] == k && it->first[1] == l)
        it = terms_.erase(it);
    for (const auto& [d, c] : s.terms())
        set({k, l, d}, c);
}

TriSeries TriSeries::eta_taylor(int n) const
{
    TriSeries out(truncs_, labels_);
    for (const auto& [e, c] : terms_) {
        if (e[2] < n)
            continue;
        Rational b = binomial(Rational(e[2]), n);
        out.terms_.emplace_hint(out.terms_.end(), e, c * b);
    }
    return out;
}

std::optional<TriSeries::Index> TriSeries::first_difference(const TriSeries& o) const
{
    TriSeries d = *this - o;
    return d.first_nonzero();
}

std::string TriSeries::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c << ")";
        for (int x = 0; x < 3; ++x) {
            if (e[x] == 0)
                continue;
            os << "*" << labels_[x];
            if (e[x] > 1)
                os << "^" << e[x];
        }
    }
    if (first)
        os << "0";
    os << " + O(";
    for (int x = 0; x < 3; ++x) {
        if (x)
            os << ",";
        if (truncs_[x] >= kExact)
            os << "-";
        else
            os << labels_[x] << "^" << truncs_[x];
    }
    os << ")";
    return os.str();
}

bool operator==(const TriSeries& a, const TriSeries& b)
{
    return a.truncs() == b.truncs() && a.labels() == b.labels() && a.terms() == b.terms();
}

TriSeries compose_eta(const TriSeries& rho, const TriSeries& t)
{
    bool shifted = !t.is_zero();
    for (const auto& [e, c] : t.terms())
        if (e[2] < 1) {
            shifted = false;
            break;
        }
    if (shifted) {
        TriSeries u = t.div_eta(1);
        if (u.constant_term().is_one()) {
            TriSeries delta = u - TriSeries::constant(GaussRational(1)).relabeled(t.labels());
            TriSeries out = rho.eta_taylor(0).relabeled(t.labels());
            TriSeries power = TriSeries::constant(GaussRational(1)).relabeled(t.labels());
            int top = rho.max_degrees()[2];
            for (int n = 1; n <= top; ++n) {
                power = power * delta;
                if (power.is_zero())
                    break;
                out += rho.eta_taylor(n).relabeled(t.labels()) * power;
            }
            // when delta^n dies early the remaining Taylor terms vanish in the box
            return out;
        }
    }
    if (!t.constant_term().is_zero())
        throw DomainError("composition would require infinitely many terms: inner series has a "
                          "constant term");
    // Horner in the etab-slices of rho
    int top = rho.max_degrees()[2];
    TriSeries::Truncs base = rho.truncs();
    base[2] = kExact;
    TriSeries out(base, t.labels());
    TriSeries power = TriSeries::constant(GaussRational(1)).relabeled(t.labels());
    for (int j = 0; j <= top; ++j) {
        if (j > 0)
            power = power * t;
        TriSeries slice(base, t.labels());
        for (const auto& [e, c] : rho.terms())
            if (e[2] == j)
                slice.set({e[0], e[1], 0}, c);
        out += slice * power;
    }
    if (rho.truncs()[2] < kExact) {
        // the unknown tail is O(t^T)
        TriSeries::Truncs cap = TriSeries::exact_truncs();
        bool capped = false;
        auto vt = t.valuations();
        for (int x = 0; x < 3; ++x) {
            if (vt[x] > 0) {
                long r = static_cast<long>(rho.truncs()[2]) * vt[x];
                cap[x] = static_cast<int>(std::min<long>(r, kExact));
                capped = true;
            }
        }
        if (!capped)
            throw DomainError("composition of a truncated series needs an inner series of positive "
                              "valuation in a truncated variable");
        out = out.truncated(cap);
    }
    return out;
}

TriSeries compose(const USeries& f, const TriSeries& t)
{
    return compose_eta(TriSeries::embed(f, 2).relabeled(t.labels()), t);
}

}  // namespace segrekit
