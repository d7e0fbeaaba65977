#pragma once

#include "segrekit/serialize.hpp"
#include "segrekit/ulaurent.hpp"

#include <string>
#include <vector>

namespace segrekit {

// z'' = (A z + B) z' / w^m + (C z^3 + D z^2 + E z + F) / w^{2m}
struct P0Ode {
    int m = 1;
    USeries A, B, C, D, E, F;

    static P0Ode flat(int m, int trunc);
    int trunc() const;
    bool is_linear() const { return A.is_zero() && C.is_zero() && D.is_zero() && F.is_zero(); }
    std::string str() const;
};

// C = -A^2/9
USeries relation_C(const USeries& A);
// D = (w^{2m} (A/w^m)' - A B) / 3 = (w^m A' - m w^{m-1} A - A B) / 3
USeries relation_D(const USeries& A, const USeries& B, int m);
// fills C and D from the relations
P0Ode complete_p0(int m, const USeries& A, const USeries& B, const USeries& E, const USeries& F);

struct RelationViolation {
    std::string relation;  // "C" or "D"
    int degree;            // first failing degree
    GaussRational difference;
};
std::vector<RelationViolation> validate_p0(const P0Ode& ode);

P0Ode conjugate_ode(const P0Ode& ode);

// w'' = -(A z + B)(w')^2 / w^m - (C z^3 + D z^2 + E z + F)(w')^3 / w^{2m}
struct InverseOde {
    int m;
    USeries A, B, C, D, E, F;
    std::string str() const;
};
InverseOde inverse_ode(const P0Ode& ode);

// least m' <= ode.m keeping all coefficients holomorphic, with rescaled coefficients
P0Ode singularity_order(const P0Ode& raw);

// z'' = q0 + q1 z + q2 z^2 + q3 z^3 + (p0 + p1 z) z'
struct GeneralP0 {
    ULaurent p0, p1, q0, q1, q2, q3;
};
GeneralP0 to_general(const P0Ode& ode);
// q3 = -p1^2/9, q2 = (p1' - p0 p1)/3
std::vector<RelationViolation> validate_general(const GeneralP0& g);

Json to_json(const P0Ode& ode);
P0Ode p0_from_json(const Json& j);

}  // namespace segrekit
