#include "segrekit/segre.hpp"

#include "segrekit/errors.hpp"

#include <algorithm>
#include <sstream>

namespace segrekit {

namespace {

using Idx = TriSeries::Index;
using Truncs = TriSeries::Truncs;

const GaussRational kI = GaussRational::i();

TriSeries one() { return TriSeries::constant(GaussRational(1)); }

// sum_j binom(j, n) x_j w^j
USeries eta_taylor(const USeries& x, int n)
{
    USeries out(x.trunc(), x.var());
    for (const auto& [j, c] : x.terms())
        if (j >= n)
            out.set(j, c * GaussRational(binomial(Rational(j), n)));
    return out;
}

// Powers of delta = u - 1, shared by every substitution X(etab*u) in one iteration.
class EtaShift {
public:
    explicit EtaShift(const TriSeries& u)
    {
        TriSeries delta = u - one();
        powers_.push_back(one());
        for (;;) {
            TriSeries next = powers_.back() * delta;
            if (next.is_zero())
                break;
            powers_.push_back(std::move(next));
        }
        box_ = u.truncs();
    }

    // X(etab * u)
    TriSeries apply(const USeries& x) const
    {
        Truncs t = box_;
        t[2] = std::min(t[2], x.trunc());
        TriSeries out(t);
        for (size_t n = 0; n < powers_.size(); ++n) {
            if (x.degree() < static_cast<int>(n))
                break;
            out += powers_[n].mul_eta(eta_taylor(x, static_cast<int>(n)));
        }
        return out;
    }

    // u^e = sum_n binom(e, n) delta^n
    TriSeries power(int e) const
    {
        TriSeries out(box_);
        for (size_t n = 0; n < powers_.size(); ++n)
            out += powers_[n] * GaussRational(binomial(Rational(e), static_cast<long>(n)));
        return out;
    }

private:
    std::vector<TriSeries> powers_;
    Truncs box_;
};

AdmissiblePhi solve_plus(const P0Ode& ode, Truncs box)
{
    const int m = ode.m;
    const int dz = box[0];
    const int dxi = box[1];
    const int n = std::min(box[2], ode.trunc());
    if (n >= kExact)
        throw DomainError("solve_phi needs a finite etab box or a truncated ODE");
    if (dz < 2 || dxi < 2 || n < 1)
        throw DomainError("solve_phi box must be at least (2, 2, 1)");

    USeries A = ode.A.truncated(n), B = ode.B.truncated(n), C = ode.C.truncated(n),
            D = ode.D.truncated(n), E = ode.E.truncated(n), F = ode.F.truncated(n);

    const TriSeries xi = TriSeries::monomial(kI, {0, 1, 0});
    TriSeries u = one().truncated({dz, dxi, n + m - 1});
    TriSeries q = xi.truncated({dz - 1, dxi, n});

    int wz = std::min(2, dz);
    const int cap = dz + 8;
    for (int it = 0;; ++it) {
        if (it > cap)
            throw InternalError("solve_phi: Picard iteration did not become stationary");
        Truncs tu{wz, dxi, n + m - 1};
        Truncs tq{wz - 1, dxi, n};
        TriSeries uu = u.truncated(tu);
        TriSeries qq = q.truncated(tq);

        EtaShift sh(uu);
        TriSeries P = sh.apply(A).shift({1, 0, 0}) + sh.apply(B);
        TriSeries Q = sh.apply(C).shift({3, 0, 0}) + sh.apply(D).shift({2, 0, 0}) +
                      sh.apply(E).shift({1, 0, 0}) + sh.apply(F);
        TriSeries uinv = sh.power(-m);
        TriSeries q2 = qq * qq;
        TriSeries rhs = P * q2 * uinv + Q * (q2 * qq) * (uinv * uinv);
        TriSeries qn = (xi - rhs.integral_z()).truncated(tq);
        TriSeries un = (one() + qn.shift({0, 0, m - 1}).integral_z()).truncated(tu);

        bool full = wz == dz;
        bool stationary = full && un == u && qn == q;
        u = std::move(un);
        q = std::move(qn);
        if (stationary)
            break;
        wz = std::min(wz + 1, dz);
    }

    TriSeries phi = u.log().div_eta(m - 1) * (-kI);
    phi = phi.truncated({dz, dxi, n});
    if (auto why = admissibility_violation(phi))
        throw InternalError("solve_phi produced a non-admissible family: " + *why);
    return AdmissiblePhi{m, Sign::Plus, std::move(phi)};
}

std::optional<int> first_nonreal(const USeries& s)
{
    for (const auto& [d, c] : s.terms())
        if (!c.is_real())
            return d;
    return std::nullopt;
}

}  // namespace

std::optional<std::string> admissibility_violation(const TriSeries& phi)
{
    auto known = [&](int k, int l) { return k < phi.truncs()[0] && l < phi.truncs()[1]; };
    if (known(1, 1)) {
        USeries s = phi.slice(1, 1);
        USeries want(GaussRational(1), s.trunc(), s.var());
        if (auto d = s.first_difference(want))
            return "slice (1,1) differs from 1 at degree " + std::to_string(*d);
    }
    for (const auto& [e, c] : phi.terms()) {
        int k = e[0], l = e[1];
        bool bad = k == 0 || l == 0 || (l == 1 && k >= 2) || (k == 1 && l >= 2);
        if (bad) {
            std::ostringstream os;
            os << "slice (" << k << "," << l << ") nonzero at degree " << e[2];
            return os.str();
        }
    }
    return std::nullopt;
}

P0Ode lift_order(const P0Ode& ode, int m)
{
    if (m < ode.m)
        throw DomainError("cannot lower the singularity order by lifting");
    int s = m - ode.m;
    P0Ode o;
    o.m = m;
    o.A = ode.A.shift(s);
    o.B = ode.B.shift(s);
    o.C = ode.C.shift(2 * s);
    o.D = ode.D.shift(2 * s);
    o.E = ode.E.shift(2 * s);
    o.F = ode.F.shift(2 * s);
    return o;
}

AdmissiblePhi solve_phi(const P0Ode& ode, int m, Sign sign, TriSeries::Truncs truncs)
{
    P0Ode lifted = lift_order(ode, m);
    if (sign == Sign::Plus)
        return solve_plus(lifted, truncs);
    // phi^-(E) = conj(phi^+(conj E))
    return conjugate_phi(solve_plus(conjugate_ode(lifted), truncs));
}

TriSeries segre_residual(const P0Ode& ode, const AdmissiblePhi& phi)
{
    P0Ode o = lift_order(ode, phi.m);
    const int m = phi.m;
    GaussRational si = kI * GaussRational(sign_value(phi.sign));
    TriSeries w = (phi.phi.shift({0, 0, m - 1}) * si).exp().shift({0, 0, 1});
    TriSeries w1 = w.derivative(0);
    TriSeries w2 = w1.derivative(0);
    TriSeries wm = w.pow(m);
    TriSeries P = compose(o.A, w).shift({1, 0, 0}) + compose(o.B, w);
    TriSeries Q = compose(o.C, w).shift({3, 0, 0}) + compose(o.D, w).shift({2, 0, 0}) +
                  compose(o.E, w).shift({1, 0, 0}) + compose(o.F, w);
    TriSeries w1sq = w1 * w1;
    return wm * wm * w2 + P * wm * w1sq + Q * w1sq * w1;
}

AdmissiblePhi conjugate_phi(const AdmissiblePhi& phi)
{
    return AdmissiblePhi{phi.m, flip(phi.sign), phi.phi.conj()};
}

P0Ode recover_ode(const AdmissiblePhi& phi)
{
    if (phi.sign == Sign::Minus)
        return conjugate_ode(recover_ode(conjugate_phi(phi)));
    const int m = phi.m;
    USeries p22 = phi.slice(2, 2), p23 = phi.slice(2, 3), p32 = phi.slice(3, 2),
            p33 = phi.slice(3, 3);
    int n = std::min({p22.trunc(), p23.trunc(), p32.trunc(), p33.trunc()});
    USeries wm1 = USeries::monomial(GaussRational(1), m - 1);
    USeries A = p32 * (GaussRational(6) * kI);
    USeries B = p22 * (GaussRational(2) * kI) - wm1;
    USeries E = p33 * GaussRational(6) + (p22 * wm1) * (GaussRational(2 * (m - 1)) * kI) -
                (p22 * p22) * GaussRational(8) -
                p22.derivative().shift(m) * (GaussRational(2) * kI);
    USeries F = p23 * GaussRational(2);
    return complete_p0(m, A.truncated(n), B.truncated(n), E.truncated(n), F.truncated(n));
}

LowJet dual_phi_lowjet(const AdmissiblePhi& phi)
{
    if (phi.sign != Sign::Plus)
        throw DomainError("dual_phi_lowjet expects a positive family");
    const int m = phi.m;
    USeries p22 = phi.slice(2, 2);
    int n = p22.trunc();
    USeries wm1 = USeries::monomial(GaussRational(1), m - 1);
    LowJet j;
    j.s22 = (p22 - wm1 * (GaussRational(m - 1) * kI)).truncated(n);
    j.s32 = phi.slice(2, 3);
    j.s23 = phi.slice(3, 2);
    Rational mm(m - 1);
    j.s33 = (phi.slice(3, 3) +
             USeries::monomial(GaussRational(Rational(-3, 2) * mm * mm), 2 * m - 2) -
             (wm1 * p22) * (GaussRational(2 * (m - 1)) * kI) -
             p22.derivative().shift(m) * kI)
                .truncated(n);
    return j;
}

AdmissiblePhi dual_phi_full(const AdmissiblePhi& phi)
{
    // etab = w exp(s i w^{m-1} phi(xib, z, w)); with w = etab*u,
    // u = exp(-s i etab^{m-1} u^{m-1} phi(xib, z, etab*u))
    const int m = phi.m;
    GaussRational si = kI * GaussRational(sign_value(phi.sign));
    TriSeries swapped = phi.phi.swap_z_xi();
    Truncs st = swapped.truncs();
    Truncs tu{st[0], st[1], add_trunc(st[2], m - 1)};
    TriSeries u = one().truncated(tu);
    const int cap = std::min(st[0], 64) + std::min(st[1], 64) + 4;
    for (int it = 0;; ++it) {
        if (it > cap)
            throw InternalError("dual_phi_full: fixed-point iteration did not become stationary");
        TriSeries inner = compose_eta(swapped, u.shift({0, 0, 1}));
        TriSeries expo = (u.pow(m - 1) * inner).shift({0, 0, m - 1}) * (-si);
        TriSeries un = expo.exp().truncated(tu);
        bool stationary = un == u;
        u = std::move(un);
        if (stationary)
            break;
    }
    TriSeries dual = (u.log().div_eta(m - 1) * si).truncated(st);
    if (auto why = admissibility_violation(dual))
        throw InternalError("dual family is not admissible: " + *why);
    return AdmissiblePhi{m, flip(phi.sign), std::move(dual)};
}

P0Ode build_real(const RealStructureData& d)
{
    if (d.m < 1)
        throw DomainError("singularity order must be positive");
    if (!d.a.is_real() || !d.b.is_real())
        throw DomainError("build_real needs real-coefficient a and b");
    const int m = d.m;
    int n = std::min({d.a.trunc(), d.b.trunc(), d.c.trunc()});
    USeries a = d.a.renamed("w"), b = d.b.renamed("w"), c = d.c.renamed("w");
    P0Ode o;
    o.m = m;
    o.A = (c * GaussRational(3)).truncated(n);
    o.B = (a * (GaussRational(2) * kI) - USeries::monomial(GaussRational(m), m - 1)).truncated(n);
    o.C = relation_C(o.A).truncated(n);
    o.D = (c.derivative().shift(m) - (a * c) * (GaussRational(2) * kI)).truncated(n);
    o.E = (b + a.derivative().shift(m) * kI).truncated(n);
    o.F = (c.conj() * kI).truncated(n);
    return o;
}

ExtractResult extract_real(const P0Ode& ode)
{
    const int m = ode.m;
    ExtractResult r;
    r.data.m = m;
    r.data.c = ode.A * GaussRational::frac(1, 3);
    r.data.a = (ode.B + USeries::monomial(GaussRational(m), m - 1)) *
               (GaussRational::frac(-1, 2) * kI);
    r.data.b = ode.E - r.data.a.derivative().shift(m) * kI;
    auto fail = [&](std::string what, int deg) {
        r.ok = false;
        r.violation = std::move(what);
        r.degree = deg;
        return r;
    };
    if (auto d = first_nonreal(r.data.a))
        return fail("a is not real", *d);
    if (auto d = first_nonreal(r.data.b))
        return fail("b is not real", *d);
    if (auto d = ode.F.first_difference(r.data.c.conj() * kI))
        return fail("F differs from i conj(c)", *d);
    USeries wantD = r.data.c.derivative().shift(m) - (r.data.a * r.data.c) * (GaussRational(2) * kI);
    if (auto d = ode.D.first_difference(wantD))
        return fail("D differs from w^m c' - 2i a c", *d);
    if (auto d = ode.C.first_difference(relation_C(ode.A)))
        return fail("C differs from -A^2/9", *d);
    r.ok = true;
    return r;
}

Report reality_check(const P0Ode& ode, int m, Sign sign, const RealityOptions& opt)
{
    const std::string claim = "reality";
    auto viol = validate_p0(lift_order(ode, m));
    if (!viol.empty()) {
        Json w = Json::array();
        for (const auto& v : viol)
            w.push_back({{"relation", v.relation}, {"degree", v.degree},
                         {"difference", to_json(v.difference)}});
        return Report::fail(claim, w, "ODE violates the P0 relations");
    }
    Truncs box = opt.truncs;
    box[2] = std::min(box[2], ode.trunc());
    AdmissiblePhi phi = solve_phi(ode, m, sign, box);
    AdmissiblePhi bar = conjugate_phi(phi);
    AdmissiblePhi dual = dual_phi_full(phi);

    Json witness = Json::array();
    int order = kExact;
    std::optional<int> first_bad;
    for (int k = 2; k <= 3; ++k)
        for (int l = 2; l <= 3; ++l) {
            USeries x = bar.slice(k, l), y = dual.slice(k, l);
            order = std::min({order, x.trunc(), y.trunc()});
            if (auto d = x.first_difference(y)) {
                witness.push_back({{"k", k},
                                   {"l", l},
                                   {"degree", *d},
                                   {"conjugate", to_json(x.coeff(*d))},
                                   {"dual", to_json(y.coeff(*d))}});
                first_bad = first_bad ? std::min(*first_bad, *d) : *d;
            }
        }
    std::ostringstream detail;
    if (!witness.empty()) {
        detail << "conjugate and dual families differ on";
        for (const auto& w : witness)
            detail << " (" << w["k"].get<int>() << "," << w["l"].get<int>() << ")@"
                   << w["degree"].get<int>();
        Report r = Report::fail(claim, witness, detail.str());
        r.residual_order = first_bad;
        return r;
    }
    detail << "slices (2..3, 2..3) agree mod etab^" << order;
    Report r = Report::pass(claim, detail.str());
    r.residual_order = order;
    return r;
}

Json to_json(const AdmissiblePhi& phi)
{
    Json j;
    j["m"] = phi.m;
    j["sign"] = sign_name(phi.sign);
    Json t = Json::array();
    for (int x : phi.phi.truncs())
        t.push_back(x >= kExact ? Json(nullptr) : Json(x));
    j["truncs"] = t;
    Json slices = Json::array();
    auto mx = phi.phi.max_degrees();
    for (int k = 0; k <= mx[0]; ++k)
        for (int l = 0; l <= mx[1]; ++l) {
            USeries s = phi.slice(k, l);
            if (!s.is_zero())
                slices.push_back({{"k", k}, {"l", l}, {"series", to_json(s)}});
        }
    j["slices"] = slices;
    return j;
}

AdmissiblePhi phi_from_json(const Json& j)
{
    try {
        AdmissiblePhi p;
        p.m = j.at("m").get<int>();
        if (p.m < 1)
            throw ParseError("singularity order must be positive");
        std::string s = j.at("sign").get<std::string>();
        if (s != "+" && s != "-")
            throw ParseError("sign must be \"+\" or \"-\"");
        p.sign = s == "+" ? Sign::Plus : Sign::Minus;
        Truncs t;
        const Json& jt = j.at("truncs");
        if (!jt.is_array() || jt.size() != 3)
            throw ParseError("truncs must be a list of three entries");
        for (int x = 0; x < 3; ++x)
            t[x] = jt[x].is_null() ? kExact : jt[x].get<int>();
        p.phi = TriSeries(t);
        for (const auto& e : j.at("slices")) {
            int k = e.at("k").get<int>(), l = e.at("l").get<int>();
            if (k < 0 || l < 0 || k >= t[0] || l >= t[1])
                throw ParseError("slice index outside the box");
            p.phi.set_slice(k, l, series_from_json(e.at("series")).truncated(t[2]));
        }
        return p;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed family record: ") + e.what());
    }
}

Json to_json(const RealStructureData& d)
{
    return Json{{"m", d.m}, {"a", to_json(d.a)}, {"b", to_json(d.b)}, {"c", to_json(d.c)}};
}

}  // namespace segrekit
