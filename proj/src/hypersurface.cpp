#include "segrekit/hypersurface.hpp"

#include "segrekit/errors.hpp"

#include <sstream>

namespace segrekit {

namespace {

const GaussRational kI = GaussRational::i();

Report series_report(const std::string& claim, const TriSeries& r, const std::string& zero_msg)
{
    auto first = r.first_nonzero();
    if (!first) {
        Report rep = Report::pass(claim, zero_msg);
        int order = kExact;
        for (int t : r.truncs())
            order = std::min(order, t);
        if (order < kExact)
            rep.residual_order = order;
        return rep;
    }
    const auto& e = *first;
    Json w{{"monomial", {e[0], e[1], e[2]}}, {"coeff", to_json(r.coeff(e))}};
    std::ostringstream os;
    os << "first nonzero term " << r.coeff(e).str() << " * " << r.labels()[0] << "^" << e[0] << " "
       << r.labels()[1] << "^" << e[1] << " " << r.labels()[2] << "^" << e[2];
    Report rep = Report::fail(claim, w, os.str());
    rep.residual_order = e[0] + e[1] + e[2];
    return rep;
}

// sum c_ab z^a t^b with precomputed powers of t
TriSeries eval_holo(const BiPoly& f, const std::vector<TriSeries>& tp, const TriSeries::Truncs& box)
{
    TriSeries out(box, hyper_labels());
    for (const auto& [k, c] : f.terms())
        out += tp[k.second].shift({k.first, 0, 0}) * c;
    return out;
}

// sum conj(c_ab) zb^a wb^b
TriSeries eval_antiholo(const BiPoly& f)
{
    TriSeries out(TriSeries::exact_truncs(), hyper_labels());
    for (const auto& [k, c] : f.terms())
        out.add_to({0, k.first, k.second}, c.conj());
    return out;
}

int max_w_degree(const BiPoly& p)
{
    int d = 0;
    for (const auto& [k, c] : p.terms())
        d = std::max(d, k.second);
    return d;
}

}  // namespace

HyperJet build_hypersurface(const AdmissiblePhi& phi)
{
    const int m = phi.m;
    GaussRational si = kI * GaussRational(sign_value(phi.sign));
    TriSeries rho = (phi.phi.shift({0, 0, m - 1}) * si).exp().shift({0, 0, 1});
    return HyperJet{m, phi.sign, rho.relabeled(hyper_labels())};
}

TriSeries reality_defect(const HyperJet& h)
{
    TriSeries::Labels lab{"z", "zb", "w"};
    TriSeries sigma = h.rho.conj().swap_z_xi().relabeled(lab);
    TriSeries comp = compose_eta(h.rho.relabeled(lab), sigma);
    return TriSeries::monomial(GaussRational(1), {0, 0, 1}).relabeled(lab) - comp;
}

Report reality_verify(const HyperJet& h)
{
    return series_report("reality-hypersurface", reality_defect(h),
                         "w = rho(z, zb, rhobar(zb, z, w))");
}

BiPoly BiPoly::monomial(const GaussRational& c, int a, int b)
{
    BiPoly p;
    p.add(a, b, c);
    return p;
}

void BiPoly::add(int a, int b, const GaussRational& c)
{
    if (a < 0 || b < 0)
        throw DomainError("negative exponent in a holomorphic polynomial");
    auto it = terms_.find({a, b});
    if (it == terms_.end()) {
        if (!c.is_zero())
            terms_.emplace(Key{a, b}, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms_.erase(it);
}

BiPoly& BiPoly::operator+=(const BiPoly& o)
{
    for (const auto& [k, c] : o.terms_)
        add(k.first, k.second, c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b)
{
    BiPoly out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BiPoly operator*(const BiPoly& a, const GaussRational& c)
{
    BiPoly out;
    for (const auto& [k, v] : a.terms_)
        out.add(k.first, k.second, v * c);
    return out;
}

BiPoly BiPoly::d_z() const
{
    BiPoly out;
    for (const auto& [k, c] : terms_)
        if (k.first > 0)
            out.add(k.first - 1, k.second, c * GaussRational(k.first));
    return out;
}

BiPoly BiPoly::d_w() const
{
    BiPoly out;
    for (const auto& [k, c] : terms_)
        if (k.second > 0)
            out.add(k.first, k.second - 1, c * GaussRational(k.second));
    return out;
}

std::string BiPoly::str() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        if (k.first)
            os << "*z^" << k.first;
        if (k.second)
            os << "*w^" << k.second;
    }
    return os.str();
}

std::string HoloField::str() const { return "(" + fz.str() + ") d/dz + (" + fw.str() + ") d/dw"; }

HoloField operator+(const HoloField& a, const HoloField& b) { return {a.fz + b.fz, a.fw + b.fw}; }

HoloField operator*(const HoloField& a, const GaussRational& c) { return {a.fz * c, a.fw * c}; }

HoloField lie_bracket(const HoloField& X, const HoloField& Y)
{
    auto apply = [](const HoloField& V, const BiPoly& f) { return V.fz * f.d_z() + V.fw * f.d_w(); };
    return {apply(X, Y.fz) - apply(Y, X.fz), apply(X, Y.fw) - apply(Y, X.fw)};
}

TriSeries tangency_residual(const HyperJet& h, const HoloField& X)
{
    const TriSeries& rho = h.rho;
    int top = std::max(max_w_degree(X.fz), max_w_degree(X.fw));
    std::vector<TriSeries> rp;
    rp.push_back(TriSeries::constant(GaussRational(1)).relabeled(hyper_labels()));
    for (int b = 1; b <= top; ++b)
        rp.push_back(rp.back() * rho);
    TriSeries::Truncs box = rho.truncs();
    TriSeries fw = eval_holo(X.fw, rp, box);
    TriSeries fz = eval_holo(X.fz, rp, box);
    return fw - rho.derivative(0) * fz - rho.derivative(1) * eval_antiholo(X.fz) -
           rho.derivative(2) * eval_antiholo(X.fw);
}

Report tangency_check(const HyperJet& h, const HoloField& X)
{
    return series_report("tangency", tangency_residual(h, X), "X + Xbar is tangent");
}

Json to_json(const HyperJet& h)
{
    return Json{{"m", h.m}, {"sign", sign_name(h.sign)}, {"rho", to_json(h.rho)}};
}

HyperJet hyperjet_from_json(const Json& j)
{
    try {
        HyperJet h;
        h.m = j.at("m").get<int>();
        if (h.m < 1)
            throw ParseError("singularity order must be positive");
        std::string s = j.at("sign").get<std::string>();
        if (s != "+" && s != "-")
            throw ParseError("sign must be \"+\" or \"-\"");
        h.sign = s == "+" ? Sign::Plus : Sign::Minus;
        h.rho = triseries_from_json(j.at("rho")).relabeled(hyper_labels());
        return h;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed hypersurface record: ") + e.what());
    }
}

Json to_json(const BiPoly& p)
{
    Json terms = Json::array();
    for (const auto& [k, c] : p.terms())
        terms.push_back({{"deg", {k.first, k.second}}, {"coeff", to_json(c)}});
    return terms;
}

BiPoly bipoly_from_json(const Json& j)
{
    if (!j.is_array())
        throw ParseError("polynomial must be a list of terms");
    BiPoly p;
    for (const auto& t : j) {
        const Json& d = t.at("deg");
        if (!d.is_array() || d.size() != 2)
            throw ParseError("polynomial degree must be [a, b]");
        int a = d[0].get<int>(), b = d[1].get<int>();
        if (a < 0 || b < 0)
            throw ParseError("negative exponent in a holomorphic polynomial");
        p.add(a, b, scalar_from_json(t.at("coeff")));
    }
    return p;
}

Json to_json(const HoloField& X) { return Json{{"fz", to_json(X.fz)}, {"fw", to_json(X.fw)}}; }

HoloField field_from_json(const Json& j)
{
    try {
        return HoloField{bipoly_from_json(j.at("fz")), bipoly_from_json(j.at("fw"))};
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed field record: ") + e.what());
    }
}

}  // namespace segrekit
