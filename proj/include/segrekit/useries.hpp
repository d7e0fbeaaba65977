#pragma once

#include "segrekit/gauss_rational.hpp"

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace segrekit {

// Truncation order meaning "no truncation": the series is an exact polynomial.
inline constexpr int kExact = std::numeric_limits<int>::max() / 4;

inline int add_trunc(int t, int d)
{
    if (t >= kExact)
        return kExact;
    long long r = static_cast<long long>(t) + d;
    return r >= kExact ? kExact : static_cast<int>(r);
}

// Truncated power series sum_{0 <= d < trunc} c_d var^d.
class USeries {
public:
    using Terms = std::map<int, GaussRational>;

    explicit USeries(int trunc = kExact, std::string var = "w");
    USeries(const GaussRational& c, int trunc, std::string var = "w");

    static USeries monomial(const GaussRational& c, int deg, int trunc = kExact,
                            std::string var = "w");
    // degree-ascending coefficient list; trunc defaults to exact
    static USeries from_coeffs(const std::vector<GaussRational>& cs, int trunc = kExact,
                               std::string var = "w");

    const std::string& var() const { return var_; }
    int trunc() const { return trunc_; }
    bool exact() const { return trunc_ >= kExact; }
    const Terms& terms() const { return terms_; }

    GaussRational coeff(int d) const;
    void set(int d, const GaussRational& c);
    void add_to(int d, const GaussRational& c);

    bool is_zero() const { return terms_.empty(); }
    // lowest stored degree, or trunc for the zero series
    int valuation() const;
    int degree() const;  // highest stored degree, -1 for zero
    bool is_real() const;

    USeries truncated(int n) const;
    USeries renamed(std::string var) const;

    USeries& operator+=(const USeries& o);
    USeries& operator-=(const USeries& o);
    USeries& operator*=(const GaussRational& c);
    friend USeries operator+(USeries a, const USeries& b) { return a += b; }
    friend USeries operator-(USeries a, const USeries& b) { return a -= b; }
    friend USeries operator*(const USeries& a, const USeries& b);
    friend USeries operator*(USeries a, const GaussRational& c) { return a *= c; }
    friend USeries operator*(const GaussRational& c, USeries a) { return a *= c; }
    USeries operator-() const;

    USeries derivative() const;
    USeries integral() const;  // zero constant of integration
    USeries shift(int k) const;  // times var^k, k >= 0
    // exact division by var^k; throws DomainError if a low coefficient is nonzero
    USeries divide_by_power(int k) const;
    USeries conj() const;

    // n bounds the expansion when the input is exact
    USeries inverse(int n = kExact) const;
    USeries exp(int n = kExact) const;
    USeries log(int n = kExact) const;
    USeries pow(const Rational& e, int n = kExact) const;  // constant term must be 1
    USeries pow(int e, int n = kExact) const;

    // this(t); t(0) must vanish unless this is an exact polynomial
    USeries compose(const USeries& t) const;
    // compositional inverse of w + O(w^2)
    USeries reversion() const;

    // first degree below the common trunc where the two differ
    std::optional<int> first_difference(const USeries& o) const;
    bool equal_mod(const USeries& o) const { return !first_difference(o).has_value(); }

    std::string str() const;

private:
    void check_var(const USeries& o) const;
    int expansion_bound(int n, const char* what) const;
    void prune();

    std::string var_;
    int trunc_;
    Terms terms_;
};

bool operator==(const USeries& a, const USeries& b);
inline bool operator!=(const USeries& a, const USeries& b) { return !(a == b); }

}  // namespace segrekit
