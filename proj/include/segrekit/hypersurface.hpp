#pragma once

#include "segrekit/segre.hpp"

#include <map>
#include <utility>

namespace segrekit {

// w = rho(z, zb, wb)
struct HyperJet {
    int m = 1;
    Sign sign = Sign::Plus;
    TriSeries rho;
};

inline TriSeries::Labels hyper_labels() { return {"z", "zb", "wb"}; }

// rho = wb exp(+-i wb^{m-1} phi(z, zb, wb))
HyperJet build_hypersurface(const AdmissiblePhi& phi);

// w - rho(z, zb, rhobar(zb, z, w)) as a series in (z, zb, w)
TriSeries reality_defect(const HyperJet& h);
Report reality_verify(const HyperJet& h);

// exact polynomial in (z, w)
class BiPoly {
public:
    using Key = std::pair<int, int>;
    BiPoly() = default;
    static BiPoly monomial(const GaussRational& c, int a, int b);

    const std::map<Key, GaussRational>& terms() const { return terms_; }
    void add(int a, int b, const GaussRational& c);
    bool is_zero() const { return terms_.empty(); }

    BiPoly& operator+=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a += b * GaussRational(-1); }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const GaussRational& c);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    BiPoly d_z() const;
    BiPoly d_w() const;
    std::string str() const;

private:
    std::map<Key, GaussRational> terms_;
};

// fz d/dz + fw d/dw
struct HoloField {
    BiPoly fz, fw;
    std::string str() const;
};

HoloField operator+(const HoloField& a, const HoloField& b);
HoloField operator*(const HoloField& a, const GaussRational& c);
HoloField lie_bracket(const HoloField& X, const HoloField& Y);

// (X + Xbar)(w - rho) on the hypersurface, as a series in (z, zb, wb)
TriSeries tangency_residual(const HyperJet& h, const HoloField& X);
Report tangency_check(const HyperJet& h, const HoloField& X);

Json to_json(const HyperJet& h);
HyperJet hyperjet_from_json(const Json& j);
Json to_json(const BiPoly& p);
BiPoly bipoly_from_json(const Json& j);
Json to_json(const HoloField& X);
HoloField field_from_json(const Json& j);

}  // namespace segrekit
