#include "segrekit/serialize.hpp"

#include "segrekit/errors.hpp"

namespace segrekit {

namespace {

Json rational_json(const Rational& q)
{
    return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from(const Json& j)
{
    try {
        mpz_class num(j.at("num").get<std::string>());
        mpz_class den(j.at("den").get<std::string>());
        if (den == 0)
            throw ParseError("zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed rational: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("malformed rational: ") + e.what());
    }
}

Json trunc_json(int t) { return t >= kExact ? Json(nullptr) : Json(t); }

int trunc_from(const Json& j)
{
    if (j.is_null())
        return kExact;
    if (!j.is_number_integer())
        throw ParseError("truncation must be an integer or null");
    return j.get<int>();
}

}  // namespace

Json to_json(const GaussRational& x)
{
    return Json{{"re", rational_json(x.re())}, {"im", rational_json(x.im())}};
}

GaussRational scalar_from_json(const Json& j)
{
    if (j.is_string())
        return GaussRational::parse(j.get<std::string>());
    if (!j.is_object())
        throw ParseError("scalar must be an object or a string");
    return GaussRational(rational_from(j.at("re")), rational_from(j.at("im")));
}

Json to_json(const USeries& s)
{
    Json terms = Json::array();
    for (const auto& [d, c] : s.terms())
        terms.push_back(Json{{"deg", d}, {"coeff", to_json(c)}});
    return Json{{"var", s.var()}, {"trunc", trunc_json(s.trunc())}, {"terms", terms}};
}

USeries series_from_json(const Json& j)
{
    try {
        USeries s(trunc_from(j.at("trunc")), j.at("var").get<std::string>());
        for (const auto& t : j.at("terms")) {
            int d = t.at("deg").get<int>();
            if (d < 0)
                throw ParseError("negative degree in power series");
            s.set(d, scalar_from_json(t.at("coeff")));
        }
        return s;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed series: ") + e.what());
    }
}

Json to_json(const ULaurent& s)
{
    Json terms = Json::array();
    for (const auto& [d, c] : s.terms())
        terms.push_back(Json{{"deg", d}, {"coeff", to_json(c)}});
    return Json{{"var", s.var()}, {"trunc", trunc_json(s.trunc())}, {"terms", terms}};
}

ULaurent laurent_from_json(const Json& j)
{
    try {
        std::string var = j.at("var").get<std::string>();
        int trunc = trunc_from(j.at("trunc"));
        int low = 0;
        for (const auto& t : j.at("terms"))
            low = std::min(low, t.at("deg").get<int>());
        if (trunc < kExact)
            low = std::min(low, trunc);
        int pole = -low;
        USeries body(add_trunc(trunc, pole), var);
        for (const auto& t : j.at("terms"))
            body.set(t.at("deg").get<int>() + pole, scalar_from_json(t.at("coeff")));
        return ULaurent(body, pole);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed Laurent series: ") + e.what());
    }
}

Json to_json(const TriSeries& s)
{
    Json terms = Json::array();
    for (const auto& [e, c] : s.terms())
        terms.push_back(Json{{"deg", {e[0], e[1], e[2]}}, {"coeff", to_json(c)}});
    const auto& t = s.truncs();
    const auto& v = s.labels();
    return Json{{"var", {v[0], v[1], v[2]}},
                {"trunc", {trunc_json(t[0]), trunc_json(t[1]), trunc_json(t[2])}},
                {"terms", terms}};
}

TriSeries triseries_from_json(const Json& j)
{
    try {
        const Json& jt = j.at("trunc");
        const Json& jv = j.at("var");
        if (jt.size() != 3 || jv.size() != 3)
            throw ParseError("TriSeries needs three variables");
        TriSeries s({trunc_from(jt[0]), trunc_from(jt[1]), trunc_from(jt[2])},
                    {jv[0].get<std::string>(), jv[1].get<std::string>(), jv[2].get<std::string>()});
        for (const auto& t : j.at("terms")) {
            const Json& d = t.at("deg");
            if (d.size() != 3)
                throw ParseError("TriSeries degree needs three entries");
            s.set({d[0].get<int>(), d[1].get<int>(), d[2].get<int>()}, scalar_from_json(t.at("coeff")));
        }
        return s;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed TriSeries: ") + e.what());
    }
}

}  // namespace segrekit
