#pragma once

#include "segrekit/p0ode.hpp"
#include "segrekit/report.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace segrekit {

struct CMat2 {
    std::array<std::array<GaussRational, 2>, 2> e{};

    static CMat2 identity();
    GaussRational trace() const { return e[0][0] + e[1][1]; }
    GaussRational det() const { return e[0][0] * e[1][1] - e[0][1] * e[1][0]; }
    bool is_zero() const;
    bool is_diagonal() const;
    CMat2 inverse() const;
    std::string str() const;
};

CMat2 operator*(const CMat2& a, const CMat2& b);
bool operator==(const CMat2& a, const CMat2& b);

// 2x2 matrix of power series in w
struct Mat2 {
    std::array<std::array<USeries, 2>, 2> e;

    Mat2();
    explicit Mat2(int trunc);
    static Mat2 identity(int trunc = kExact);
    static Mat2 constant(const CMat2& c, int trunc = kExact);

    CMat2 coeff(int d) const;
    void set_coeff(int d, const CMat2& c);
    int trunc() const;
    bool is_zero() const;

    Mat2 truncated(int n) const;
    Mat2 derivative() const;
    Mat2 shift(int k) const;
    // constant term must be invertible; n bounds the expansion for exact input
    Mat2 inverse(int n = kExact) const;
    std::optional<int> first_difference(const Mat2& o) const;
};

Mat2 operator+(const Mat2& a, const Mat2& b);
Mat2 operator-(const Mat2& a, const Mat2& b);
Mat2 operator*(const Mat2& a, const Mat2& b);
Mat2 operator*(const Mat2& a, const GaussRational& c);

// y' = w^{-pole} A(w) y
struct LinSystem {
    int pole = 1;
    Mat2 A;
};

// y = H ytilde
struct FormalGauge {
    Mat2 H;
};

// (z, w) -> (z f(w), g(w))
struct ScalarGauge {
    USeries f, g;

    static ScalarGauge identity(int trunc = kExact);
    // f(0) = 1, g(0) = 0, g'(0) = 1, g = w + O(w^{m+1})
    bool in_class(int m) const;
    // f(0) != 0, g(0) = 0, g'(0) != 0
    bool invertible() const;
};

ScalarGauge inverse(const ScalarGauge& F);
// apply `first`, then `second`
ScalarGauge compose(const ScalarGauge& first, const ScalarGauge& second);

// z'' = P z' + Q z
struct LinearOde {
    ULaurent P, Q;
};
LinearOde linear_ode(const P0Ode& ode);
// z'' = (2i - 4w^3) z'/w^4 + gamma w^4 z / w^8
P0Ode e_gamma(const GaussRational& gamma);

LinSystem to_system(const P0Ode& ode);

struct GaugeStep {
    int degree;
    std::string kind;  // "diagonalize", "offdiag", "diag"
    CMat2 T;           // factor I + w^degree T, or w^degree-shifted diagonal
};

struct Resonance {
    int degree;
    int i, j;
    GaussRational coefficient;
    bool obstruction;  // a nonzero term that could not be removed off the retained set
};

struct PoincareDulac {
    LinSystem normal;
    FormalGauge gauge;
    std::array<GaussRational, 2> eigenvalues;
    std::vector<GaugeStep> steps;
    std::vector<Resonance> log;
};

// Normalizes degrees 1..N-1. Non-Fuchsian: removes off-diagonal terms and holomorphic diagonal
// terms, keeps the diagonal polar part. Fuchsian (pole 1): removes everything non-resonant.
PoincareDulac poincare_dulac(const LinSystem& sys, int N);
// H At - (A H - w^p H'); zero iff the gauge conjugates sys to the normal form
Mat2 conjugation_residual(const LinSystem& sys, const FormalGauge& gauge, const LinSystem& normal);

std::optional<GaussRational> exact_sqrt(const GaussRational& x);

// unique formal solution with a_0 = 1
USeries fhat_recurrence(const GaussRational& gamma, int N);

struct FormalFundamental {
    USeries fhat, ghat;
    USeries fhat_from_gauge;  // H11 of the normalizing gauge
};
FormalFundamental formal_fundamental(const GaussRational& gamma, int N);

ScalarGauge gauge_chi_tau(const USeries& fhat, const USeries& ghat, int N);

// ODE whose solutions the gauge maps onto solutions of `target`
LinearOde pullback(const LinearOde& target, const ScalarGauge& F);
// image of the ODE under the gauge
LinearOde transform(const LinearOde& ode, const ScalarGauge& F);

struct TransformResult {
    LinearOde image;
    std::optional<int> first_difference;  // against the target, if any
    int known_order = kExact;             // residual is known below this degree
};
TransformResult transform_ode_by_gauge(const P0Ode& ode, const ScalarGauge& F,
                                       const std::optional<P0Ode>& target = std::nullopt);

// P p + Q - (p' + p^2)
ULaurent riccati_residual(const LinearOde& ode, const ULaurent& p);
Report riccati_check(const P0Ode& ode, const ULaurent& p);

struct DivergenceReport {
    std::vector<GaussRational> a;
    int k0 = 10;
    Rational min_ratio_sq;  // min |a_{k+3}|^2/|a_k|^2 over certified indices
    int min_ratio_index = -1;
    std::optional<int> first_failure;  // k where |a_{k+3}| < k/4 |a_k|
    bool certified = false;
};
DivergenceReport divergence_report(const GaussRational& gamma, int K, int k0 = 10);

struct Monodromy {
    CMat2 residue;
    std::array<GaussRational, 2> eigenvalues;
    LinSystem normal;  // Fuchsian normal form in t
    std::vector<Resonance> obstructions;
    bool trivial = false;
};
Monodromy monodromy_at_infinity(const LinSystem& sys, int N = 8);

ScalarGauge companion_gauge(const ScalarGauge& F, int m);

Json to_json(const CMat2& m);
Json to_json(const Mat2& m);
Json to_json(const LinSystem& s);
LinSystem system_from_json(const Json& j);
Json to_json(const ScalarGauge& g);
ScalarGauge gauge_from_json(const Json& j);
Json to_json(const LinearOde& o);

}  // namespace segrekit
