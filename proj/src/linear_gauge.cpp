#include "segrekit/linear_gauge.hpp"

#include "segrekit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace segrekit {

namespace {

const GaussRational kI = GaussRational::i();

std::optional<Rational> rational_sqrt(const Rational& q)
{
    if (sgn(q) < 0)
        return std::nullopt;
    mpz_class n = q.get_num(), d = q.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    return Rational(rn, rd);
}

bool lex_less(const GaussRational& a, const GaussRational& b)
{
    if (a.re() != b.re())
        return a.re() < b.re();
    return a.im() < b.im();
}

struct Eigen {
    std::array<GaussRational, 2> lambda;
    CMat2 P;  // columns are eigenvectors
};

Eigen diagonalize(const CMat2& A)
{
    if (A.is_diagonal())
        return Eigen{{A.e[0][0], A.e[1][1]}, CMat2::identity()};
    GaussRational tr = A.trace();
    GaussRational disc = tr * tr - GaussRational(4) * A.det();
    auto s = exact_sqrt(disc);
    if (!s)
        throw DomainError("leading matrix has eigenvalues outside Q(i)");
    if (s->is_zero())
        throw DomainError("leading matrix is not diagonalizable");
    GaussRational half = GaussRational::frac(1, 2);
    GaussRational l1 = (tr - *s) * half, l2 = (tr + *s) * half;
    if (lex_less(l2, l1))
        std::swap(l1, l2);
    auto vec = [&](const GaussRational& l) -> std::array<GaussRational, 2> {
        if (!A.e[0][1].is_zero() || !(l - A.e[0][0]).is_zero())
            return {A.e[0][1], l - A.e[0][0]};
        return {l - A.e[1][1], A.e[1][0]};
    };
    auto v1 = vec(l1), v2 = vec(l2);
    CMat2 P;
    P.e[0][0] = v1[0];
    P.e[1][0] = v1[1];
    P.e[0][1] = v2[0];
    P.e[1][1] = v2[1];
    if (P.det().is_zero())
        throw InternalError("eigenvector matrix is singular");
    return Eigen{{l1, l2}, P};
}

// A -> G^{-1}(A G - w^p G')
Mat2 apply_gauge(const Mat2& A, const Mat2& G, int p, int N)
{
    Mat2 Ginv = G.inverse(N);
    return (Ginv * (A * G - G.derivative().shift(p))).truncated(N);
}

// P(g) for Laurent P and g = a w + O(w^2)
ULaurent compose_laurent(const ULaurent& P, const USeries& g)
{
    if (P.is_zero())
        return P;
    USeries h = g.divide_by_power(1);
    int lo = P.valuation();
    int hi = 0;
    for (const auto& [d, c] : P.terms())
        hi = std::max(hi, d);
    ULaurent out(P.trunc(), "w");
    USeries hp(GaussRational(1), kExact, "w");
    std::vector<std::pair<int, USeries>> pw;
    if (hi >= 0) {
        for (int d = 0; d <= hi; ++d) {
            pw.emplace_back(d, hp);
            hp = hp * h;
        }
    }
    if (lo < 0) {
        USeries hinv = h.inverse();
        USeries hn = hinv;
        for (int d = -1; d >= lo; --d) {
            pw.emplace_back(d, hn);
            hn = hn * hinv;
        }
    }
    for (const auto& [d, c] : P.terms())
        for (const auto& [e, s] : pw)
            if (e == d) {
                out += ULaurent(s * c, 0).shift(d);
                break;
            }
    return out.truncated(P.trunc());
}

}  // namespace

std::optional<GaussRational> exact_sqrt(const GaussRational& x)
{
    if (x.is_zero())
        return GaussRational();
    if (x.is_real()) {
        if (sgn(x.re()) >= 0) {
            if (auto r = rational_sqrt(x.re()))
                return GaussRational(*r);
            return std::nullopt;
        }
        if (auto r = rational_sqrt(-x.re()))
            return GaussRational(Rational(0), *r);
        return std::nullopt;
    }
    auto mod = rational_sqrt(x.norm2());
    if (!mod)
        return std::nullopt;
    auto re = rational_sqrt((x.re() + *mod) / 2);
    if (!re || sgn(*re) == 0)
        return std::nullopt;
    Rational im = x.im() / (2 * *re);
    return GaussRational(*re, im);
}

CMat2 CMat2::identity()
{
    CMat2 m;
    m.e[0][0] = m.e[1][1] = GaussRational(1);
    return m;
}

bool CMat2::is_zero() const
{
    return e[0][0].is_zero() && e[0][1].is_zero() && e[1][0].is_zero() && e[1][1].is_zero();
}

bool CMat2::is_diagonal() const { return e[0][1].is_zero() && e[1][0].is_zero(); }

CMat2 CMat2::inverse() const
{
    GaussRational d = det();
    if (d.is_zero())
        throw NonUnitError("singular constant matrix");
    GaussRational r = d.inverse();
    CMat2 m;
    m.e[0][0] = e[1][1] * r;
    m.e[1][1] = e[0][0] * r;
    m.e[0][1] = -e[0][1] * r;
    m.e[1][0] = -e[1][0] * r;
    return m;
}

std::string CMat2::str() const
{
    return "[[" + e[0][0].str() + ", " + e[0][1].str() + "], [" + e[1][0].str() + ", " +
           e[1][1].str() + "]]";
}

CMat2 operator*(const CMat2& a, const CMat2& b)
{
    CMat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m.e[i][j] = a.e[i][0] * b.e[0][j] + a.e[i][1] * b.e[1][j];
    return m;
}

bool operator==(const CMat2& a, const CMat2& b) { return a.e == b.e; }

Mat2::Mat2() : Mat2(kExact) {}

Mat2::Mat2(int trunc)
{
    for (auto& row : e)
        for (auto& x : row)
            x = USeries(trunc, "w");
}

Mat2 Mat2::identity(int trunc) { return constant(CMat2::identity(), trunc); }

Mat2 Mat2::constant(const CMat2& c, int trunc)
{
    Mat2 m(trunc);
    m.set_coeff(0, c);
    return m;
}

CMat2 Mat2::coeff(int d) const
{
    CMat2 c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c.e[i][j] = e[i][j].coeff(d);
    return c;
}

void Mat2::set_coeff(int d, const CMat2& c)
{
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            e[i][j].set(d, c.e[i][j]);
}

int Mat2::trunc() const
{
    int t = kExact;
    for (const auto& row : e)
        for (const auto& x : row)
            t = std::min(t, x.trunc());
    return t;
}

bool Mat2::is_zero() const
{
    for (const auto& row : e)
        for (const auto& x : row)
            if (!x.is_zero())
                return false;
    return true;
}

Mat2 Mat2::truncated(int n) const
{
    Mat2 m = *this;
    for (auto& row : m.e)
        for (auto& x : row)
            x = x.truncated(n);
    return m;
}

Mat2 Mat2::derivative() const
{
    Mat2 m = *this;
    for (auto& row : m.e)
        for (auto& x : row)
            x = x.derivative();
    return m;
}

Mat2 Mat2::shift(int k) const
{
    Mat2 m = *this;
    for (auto& row : m.e)
        for (auto& x : row)
            x = x.shift(k);
    return m;
}

Mat2 Mat2::inverse(int n) const
{
    USeries det = e[0][0] * e[1][1] - e[0][1] * e[1][0];
    USeries r = det.inverse(n);
    Mat2 m;
    m.e[0][0] = e[1][1] * r;
    m.e[1][1] = e[0][0] * r;
    m.e[0][1] = -(e[0][1] * r);
    m.e[1][0] = -(e[1][0] * r);
    return n < kExact ? m.truncated(n) : m;
}

std::optional<int> Mat2::first_difference(const Mat2& o) const
{
    std::optional<int> best;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (auto d = e[i][j].first_difference(o.e[i][j]))
                best = best ? std::min(*best, *d) : *d;
    return best;
}

Mat2 operator+(const Mat2& a, const Mat2& b)
{
    Mat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m.e[i][j] = a.e[i][j] + b.e[i][j];
    return m;
}

Mat2 operator-(const Mat2& a, const Mat2& b)
{
    Mat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m.e[i][j] = a.e[i][j] - b.e[i][j];
    return m;
}

Mat2 operator*(const Mat2& a, const Mat2& b)
{
    Mat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            m.e[i][j] = a.e[i][0] * b.e[0][j] + a.e[i][1] * b.e[1][j];
    return m;
}

Mat2 operator*(const Mat2& a, const GaussRational& c)
{
    Mat2 m = a;
    for (auto& row : m.e)
        for (auto& x : row)
            x *= c;
    return m;
}

ScalarGauge ScalarGauge::identity(int trunc)
{
    return ScalarGauge{USeries(GaussRational(1), trunc), USeries::monomial(GaussRational(1), 1, trunc)};
}

bool ScalarGauge::invertible() const
{
    return f.trunc() > 0 && !f.coeff(0).is_zero() && g.trunc() > 1 && g.coeff(0).is_zero() &&
           !g.coeff(1).is_zero();
}

bool ScalarGauge::in_class(int m) const
{
    if (!invertible() || !f.coeff(0).is_one() || !g.coeff(1).is_one())
        return false;
    for (int d = 2; d <= m && d < g.trunc(); ++d)
        if (!g.coeff(d).is_zero())
            return false;
    return true;
}

ScalarGauge inverse(const ScalarGauge& F)
{
    if (!F.invertible())
        throw DomainError("gauge is not invertible: need f(0) != 0, g(0) = 0, g'(0) != 0");
    GaussRational a = F.g.coeff(1);
    USeries r = (F.g * a.inverse()).reversion();
    USeries gt = r.compose(USeries::monomial(a.inverse(), 1));
    USeries fg = F.f.compose(gt);
    return ScalarGauge{fg.inverse(), gt};
}

ScalarGauge compose(const ScalarGauge& first, const ScalarGauge& second)
{
    return ScalarGauge{first.f * second.f.compose(first.g), second.g.compose(first.g)};
}

LinearOde linear_ode(const P0Ode& ode)
{
    if (!ode.is_linear())
        throw DomainError("ODE is not linear: A, C, D and F must vanish");
    return LinearOde{ULaurent(ode.B, ode.m), ULaurent(ode.E, 2 * ode.m)};
}

P0Ode e_gamma(const GaussRational& gamma)
{
    P0Ode o = P0Ode::flat(4, kExact);
    o.B = USeries::from_coeffs({GaussRational(2) * kI, 0, 0, GaussRational(-4)});
    o.E = USeries::monomial(gamma, 4);
    return o;
}

LinSystem to_system(const P0Ode& ode)
{
    if (!ode.is_linear())
        throw DomainError("to_system needs a linear ODE (A = C = D = F = 0)");
    const int m = ode.m;
    USeries Bs = ode.B + USeries::monomial(GaussRational(m - 1), m - 1);
    USeries w = USeries::monomial(GaussRational(1), 1);
    LinSystem s;
    if (ode.E.is_zero() || ode.E.valuation() >= 1) {
        s.pole = m;
        s.A.e[0][1] = w;
        s.A.e[1][0] = ode.E.divide_by_power(1);
        s.A.e[1][1] = Bs;
    } else {
        s.pole = m + 1;
        s.A.e[0][1] = w * w;
        s.A.e[1][0] = ode.E;
        s.A.e[1][1] = w * Bs;
    }
    s.A.e[0][0] = USeries(ode.trunc(), "w");
    return s;
}

PoincareDulac poincare_dulac(const LinSystem& sys, int N)
{
    if (N < 1)
        throw DomainError("normalization order must be positive");
    const int p = sys.pole;
    const bool fuchsian = p == 1;
    PoincareDulac out;
    Mat2 cur = sys.A.truncated(N);
    Mat2 H = Mat2::identity(N);

    Eigen eg = diagonalize(cur.coeff(0));
    if (!(eg.P == CMat2::identity())) {
        Mat2 P = Mat2::constant(eg.P, N);
        cur = apply_gauge(cur, P, p, N);
        H = P;
        out.steps.push_back({0, "diagonalize", eg.P});
    }
    const auto& lam = eg.lambda;
    out.eigenvalues = lam;
    if (!fuchsian && lam[0] == lam[1])
        throw DomainError("non-Fuchsian normalization needs distinct leading eigenvalues");

    for (int k = 1; k < N; ++k) {
        CMat2 Ak = cur.coeff(k);
        CMat2 T;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const GaussRational& a = Ak.e[i][j];
                if (i == j) {
                    if (fuchsian)
                        T.e[i][i] = a * GaussRational::frac(1, k);
                    else if (k <= p - 1 && !a.is_zero())
                        out.log.push_back({k, i, j, a, false});
                    continue;
                }
                GaussRational div = lam[i] - lam[j] - (fuchsian ? GaussRational(k) : GaussRational());
                if (div.is_zero()) {
                    out.log.push_back({k, i, j, a, !a.is_zero()});
                    continue;
                }
                T.e[i][j] = -a / div;
            }
        if (!T.is_zero()) {
            Mat2 G = Mat2::identity(N);
            G.set_coeff(k, T);
            cur = apply_gauge(cur, G, p, N);
            H = (H * G).truncated(N);
            out.steps.push_back({k, "offdiag", T});
        }
        if (!fuchsian && k >= p) {
            // holomorphic diagonal term w^{k-p}: remove with diag(1 + t w^s), s = k - p + 1
            int s = k - p + 1;
            CMat2 Dk = cur.coeff(k);
            CMat2 D;
            D.e[0][0] = Dk.e[0][0] * GaussRational::frac(1, s);
            D.e[1][1] = Dk.e[1][1] * GaussRational::frac(1, s);
            if (!D.is_zero()) {
                Mat2 G = Mat2::identity(N);
                G.set_coeff(s, D);
                cur = apply_gauge(cur, G, p, N);
                H = (H * G).truncated(N);
                out.steps.push_back({s, "diag", D});
            }
        }
    }
    out.normal = LinSystem{p, cur};
    // later diagonal steps touch H from degree N - p + 1 on
    out.gauge = FormalGauge{fuchsian ? H : H.truncated(N - p + 1)};
    return out;
}

Mat2 conjugation_residual(const LinSystem& sys, const FormalGauge& gauge, const LinSystem& normal)
{
    if (sys.pole != normal.pole)
        throw DomainError("pole orders differ");
    const Mat2& H = gauge.H;
    return H * normal.A - (sys.A * H - H.derivative().shift(sys.pole));
}

USeries fhat_recurrence(const GaussRational& gamma, int N)
{
    if (N < 1)
        throw DomainError("need at least one coefficient");
    std::vector<GaussRational> a(N);
    GaussRational inv2i = (GaussRational(2) * kI).inverse();
    a[0] = GaussRational(1);
    if (N > 1)
        a[1] = -gamma * inv2i;
    if (N > 2)
        a[2] = -gamma * a[1] * (GaussRational(4) * kI).inverse();
    for (int k = 0; k + 3 < N; ++k)
        a[k + 3] = GaussRational(k) * inv2i * a[k] -
                   gamma * (GaussRational(2 * (k + 3)) * kI).inverse() * a[k + 2];
    return USeries::from_coeffs(a, N);
}

FormalFundamental formal_fundamental(const GaussRational& gamma, int N)
{
    FormalFundamental out;
    out.fhat = fhat_recurrence(gamma, N);
    LinSystem sys = to_system(e_gamma(gamma));
    PoincareDulac pd = poincare_dulac(sys, N + sys.pole - 1);
    out.fhat_from_gauge = pd.gauge.H.e[0][0];
    const USeries& h12 = pd.gauge.H.e[0][1];
    GaussRational lead = h12.coeff(1);
    if (!h12.coeff(0).is_zero() || lead.is_zero())
        throw InternalError("second fundamental solution has unexpected leading order");
    out.ghat = h12 * lead.inverse();
    return out;
}

ScalarGauge gauge_chi_tau(const USeries& fhat, const USeries& ghat, int N)
{
    if (!fhat.coeff(0).is_one())
        throw DomainError("fhat must have constant term 1");
    if (!ghat.coeff(0).is_zero() || !ghat.coeff(1).is_one())
        throw DomainError("ghat must be w + O(w^2)");
    USeries chi = fhat.inverse(N);
    USeries ratio = (ghat.divide_by_power(1) * chi).truncated(N);
    USeries L = ratio.log(N);
    USeries inner = USeries(GaussRational(1), kExact) + L.shift(3) * (GaussRational::frac(3, 2) * kI);
    USeries tau = inner.pow(Rational(-1, 3), N).shift(1);
    return ScalarGauge{chi.truncated(N), tau.truncated(N)};
}

LinearOde pullback(const LinearOde& target, const ScalarGauge& F)
{
    if (!F.invertible())
        throw DomainError("gauge is not invertible");
    ULaurent f(F.f), g1(F.g.derivative()), g2(F.g.derivative().derivative());
    ULaurent f1(F.f.derivative()), f2(F.f.derivative().derivative());
    ULaurent finv(F.f.inverse()), g1inv(F.g.derivative().inverse());
    ULaurent Pg = compose_laurent(target.P, F.g);
    ULaurent Qg = compose_laurent(target.Q, F.g);
    ULaurent lf = f1 * finv;
    ULaurent drift = g2 * g1inv + Pg * g1;
    LinearOde out;
    out.P = drift - lf * GaussRational(2);
    out.Q = Qg * g1 * g1 - f2 * finv + lf * drift;
    return out;
}

LinearOde transform(const LinearOde& ode, const ScalarGauge& F) { return pullback(ode, inverse(F)); }

TransformResult transform_ode_by_gauge(const P0Ode& ode, const ScalarGauge& F,
                                       const std::optional<P0Ode>& target)
{
    TransformResult r;
    r.image = transform(linear_ode(ode), F);
    r.known_order = std::min(r.image.P.trunc(), r.image.Q.trunc());
    if (target) {
        LinearOde t = linear_ode(*target);
        auto dp = r.image.P.first_difference(t.P);
        auto dq = r.image.Q.first_difference(t.Q);
        if (dp || dq)
            r.first_difference = std::min(dp.value_or(kExact), dq.value_or(kExact));
        r.known_order = std::min({r.known_order, t.P.trunc(), t.Q.trunc()});
    }
    return r;
}

ULaurent riccati_residual(const LinearOde& ode, const ULaurent& p)
{
    return ode.P * p + ode.Q - (p.derivative() + p * p);
}

Report riccati_check(const P0Ode& ode, const ULaurent& p)
{
    ULaurent res = riccati_residual(linear_ode(ode), p);
    std::string claim = "riccati";
    if (res.is_zero()) {
        Report r = Report::pass(claim, "p' + p^2 = P p + Q");
        if (!res.exact())
            r.residual_order = res.trunc();
        return r;
    }
    Report r = Report::fail(claim, to_json(res), "residual " + res.str());
    r.residual_order = res.valuation();
    return r;
}

DivergenceReport divergence_report(const GaussRational& gamma, int K, int k0)
{
    if (gamma.is_zero())
        throw DomainError("gamma = 0 gives the convergent solution z = 1");
    if (K < 12)
        throw DomainError("divergence report needs K >= 12");
    DivergenceReport out;
    out.k0 = k0;
    USeries f = fhat_recurrence(gamma, K + 1);
    for (int k = 0; k <= K; ++k)
        out.a.push_back(f.coeff(k));
    bool any = false;
    for (int k = k0; k + 3 <= K; ++k) {
        Rational nk = out.a[k].norm2();
        if (sgn(nk) == 0)
            continue;
        Rational ratio = out.a[k + 3].norm2() / nk;
        if (!any || ratio < out.min_ratio_sq) {
            out.min_ratio_sq = ratio;
            out.min_ratio_index = k;
        }
        any = true;
        // |a_{k+3}| >= k/4 |a_k|  <=>  ratio >= k^2/16
        if (ratio < Rational(k * k, 16) && !out.first_failure)
            out.first_failure = k;
    }
    out.certified = any && !out.first_failure;
    return out;
}

Monodromy monodromy_at_infinity(const LinSystem& sys, int N)
{
    const int p = sys.pole;
    int top = -1;
    for (const auto& row : sys.A.e)
        for (const auto& x : row) {
            if (!x.exact())
                throw DomainError("monodromy at infinity needs a polynomial system");
            top = std::max(top, x.degree());
        }
    if (top > p - 1)
        throw DomainError("infinity is not a Fuchsian point of this system");
    // t = 1/w: dy/dt = t^{-1} R(t) y, R(t) = -sum_k A_k t^{p-1-k}
    LinSystem R;
    R.pole = 1;
    R.A = Mat2(kExact);
    for (int k = 0; k <= top; ++k) {
        CMat2 Ak = sys.A.coeff(k);
        for (auto& row : Ak.e)
            for (auto& x : row)
                x = -x;
        R.A.set_coeff(p - 1 - k, Ak);
    }
    Monodromy out;
    out.residue = R.A.coeff(0);
    PoincareDulac pd = poincare_dulac(R, N);
    out.eigenvalues = pd.eigenvalues;
    out.normal = pd.normal;
    for (auto& row : out.normal.A.e)
        for (auto& x : row)
            x = x.renamed("t");
    for (const auto& r : pd.log)
        if (r.obstruction)
            out.obstructions.push_back(r);
    bool diag_const = pd.normal.A.coeff(0).is_diagonal();
    for (int k = 1; k < N; ++k)
        if (!pd.normal.A.coeff(k).is_zero())
            diag_const = false;
    bool integral = true;
    for (const auto& l : out.eigenvalues)
        if (!l.is_real() || l.re().get_den() != 1)
            integral = false;
    out.trivial = diag_const && integral && out.obstructions.empty();
    return out;
}

ScalarGauge companion_gauge(const ScalarGauge& F, int m)
{
    if (m < 1)
        throw DomainError("singularity order must be positive");
    ScalarGauge Fi = inverse(F);
    const USeries& mu = Fi.g;
    USeries h = mu.divide_by_power(1);
    USeries lambda = mu.derivative() * (h.pow(m) * Fi.f).inverse();
    return inverse(ScalarGauge{lambda, mu});
}

Json to_json(const CMat2& m)
{
    return Json::array({Json::array({to_json(m.e[0][0]), to_json(m.e[0][1])}),
                        Json::array({to_json(m.e[1][0]), to_json(m.e[1][1])})});
}

Json to_json(const Mat2& m)
{
    return Json::array({Json::array({to_json(m.e[0][0]), to_json(m.e[0][1])}),
                        Json::array({to_json(m.e[1][0]), to_json(m.e[1][1])})});
}

Json to_json(const LinSystem& s) { return Json{{"pole", s.pole}, {"A", to_json(s.A)}}; }

LinSystem system_from_json(const Json& j)
{
    try {
        LinSystem s;
        s.pole = j.at("pole").get<int>();
        if (s.pole < 1)
            throw ParseError("pole order must be positive");
        const Json& a = j.at("A");
        if (!a.is_array() || a.size() != 2)
            throw ParseError("A must be a 2x2 matrix");
        for (int i = 0; i < 2; ++i) {
            if (!a[i].is_array() || a[i].size() != 2)
                throw ParseError("A must be a 2x2 matrix");
            for (int k = 0; k < 2; ++k)
                s.A.e[i][k] = series_from_json(a[i][k]);
        }
        return s;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed system record: ") + e.what());
    }
}

Json to_json(const ScalarGauge& g) { return Json{{"f", to_json(g.f)}, {"g", to_json(g.g)}}; }

ScalarGauge gauge_from_json(const Json& j)
{
    try {
        return ScalarGauge{series_from_json(j.at("f")), series_from_json(j.at("g"))};
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed gauge record: ") + e.what());
    }
}

Json to_json(const LinearOde& o) { return Json{{"P", to_json(o.P)}, {"Q", to_json(o.Q)}}; }

}  // namespace segrekit
