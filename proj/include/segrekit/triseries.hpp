#pragma once

#include "segrekit/useries.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>

namespace segrekit {

// Truncated series in three variables, monomials z^k xib^l etab^j.
// A coefficient is known iff k < truncs[0], l < truncs[1] and j < truncs[2].
class TriSeries {
public:
    using Index = std::array<int, 3>;
    using Truncs = std::array<int, 3>;
    using Labels = std::array<std::string, 3>;
    using Terms = std::map<Index, GaussRational>;

    static Labels default_labels() { return {"z", "xib", "etab"}; }
    static constexpr Truncs exact_truncs() { return {kExact, kExact, kExact}; }

    explicit TriSeries(Truncs truncs = exact_truncs(), Labels labels = default_labels());

    static TriSeries constant(const GaussRational& c, Truncs truncs = exact_truncs());
    static TriSeries monomial(const GaussRational& c, Index e, Truncs truncs = exact_truncs());
    // s placed in variable `slot` (0, 1 or 2); other variables exact unless given
    static TriSeries embed(const USeries& s, int slot, Truncs truncs = exact_truncs());

    const Truncs& truncs() const { return truncs_; }
    const Labels& labels() const { return labels_; }
    bool exact() const;
    const Terms& terms() const { return terms_; }

    GaussRational coeff(const Index& e) const;
    void set(const Index& e, const GaussRational& c);
    void add_to(const Index& e, const GaussRational& c);

    bool is_zero() const { return terms_.empty(); }
    GaussRational constant_term() const;
    // per-variable minimum stored degree (trunc for an empty series)
    Index valuations() const;
    Index max_degrees() const;
    // first nonzero monomial by total degree, then lexicographic
    std::optional<Index> first_nonzero() const;

    TriSeries truncated(const Truncs& t) const;
    TriSeries relabeled(Labels labels) const;

    TriSeries& operator+=(const TriSeries& o);
    TriSeries& operator-=(const TriSeries& o);
    TriSeries& operator*=(const GaussRational& c);
    friend TriSeries operator+(TriSeries a, const TriSeries& b) { return a += b; }
    friend TriSeries operator-(TriSeries a, const TriSeries& b) { return a -= b; }
    friend TriSeries operator*(const TriSeries& a, const TriSeries& b);
    friend TriSeries operator*(TriSeries a, const GaussRational& c) { return a *= c; }
    friend TriSeries operator*(const GaussRational& c, TriSeries a) { return a *= c; }
    TriSeries operator-() const;

    // product with a univariate series in the third variable
    TriSeries mul_eta(const USeries& s) const;
    // times z^e0 xib^e1 etab^e2
    TriSeries shift(const Index& e) const;
    // exact division by etab^k
    TriSeries div_eta(int k) const;

    TriSeries derivative(int slot = 0) const;
    TriSeries integral_z() const;  // zero constant of integration

    TriSeries exp() const;
    TriSeries log() const;
    TriSeries inverse() const;
    TriSeries pow(int e) const;

    TriSeries conj() const;
    TriSeries swap_z_xi() const;

    // coefficient of z^k xib^l as a series in the third variable
    USeries slice(int k, int l, const std::string& var = "w") const;
    void set_slice(int k, int l, const USeries& s);

    // sum_j binom(j, n) c_{klj} z^k xib^l etab^j, i.e. etab^n d^n/d etab^n / n!
    TriSeries eta_taylor(int n) const;

    std::optional<Index> first_difference(const TriSeries& o) const;
    std::string str() const;

private:
    void check_labels(const TriSeries& o) const;
    void prune();
    // some finite-trunc variable in which every term has positive degree
    bool nilpotent() const;

    Truncs truncs_;
    Labels labels_;
    Terms terms_;
};

bool operator==(const TriSeries& a, const TriSeries& b);

// rho(z, xib, t). Uses a Taylor shift when t = etab*(1 + delta) with delta(0) = 0,
// Horner otherwise (t(0) = 0 required).
TriSeries compose_eta(const TriSeries& rho, const TriSeries& t);
// f(t) for a univariate f
TriSeries compose(const USeries& f, const TriSeries& t);

}  // namespace segrekit
