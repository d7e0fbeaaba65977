#pragma once

#include "segrekit/p0ode.hpp"
#include "segrekit/report.hpp"
#include "segrekit/triseries.hpp"

#include <optional>
#include <string>
#include <vector>

namespace segrekit {

enum class Sign { Plus, Minus };

inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }
inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline const char* sign_name(Sign s) { return s == Sign::Plus ? "+" : "-"; }

// w = etab * exp(+-i etab^{m-1} phi(z, xib, etab))
struct AdmissiblePhi {
    int m = 1;
    Sign sign = Sign::Plus;
    TriSeries phi;

    USeries slice(int k, int l) const { return phi.slice(k, l, "w"); }
};

// description of the first violated shape condition, if any
std::optional<std::string> admissibility_violation(const TriSeries& phi);

// A, B scaled by w^{m - ode.m}, C..F by w^{2(m - ode.m)}
P0Ode lift_order(const P0Ode& ode, int m);

// Unique admissible family of the ODE with phi(0) = 0, d phi/dz (0) = xib.
// truncs is the output box (z, xib, etab).
AdmissiblePhi solve_phi(const P0Ode& ode, int m, Sign sign, TriSeries::Truncs truncs);

// w^{2m} w'' + (A z + B)(w) w^m (w')^2 + (C z^3 + D z^2 + E z + F)(w) (w')^3 for the family's graph;
// vanishes iff the family solves the inverse ODE
TriSeries segre_residual(const P0Ode& ode, const AdmissiblePhi& phi);

// full P0Ode; A, B, E, F from the low slices, C and D from the relations
P0Ode recover_ode(const AdmissiblePhi& phi);

struct LowJet {
    USeries s22, s23, s32, s33;
};
// s33 = phi33 - 3/2 (m-1)^2 w^{2m-2} - 2i(m-1) w^{m-1} phi22 - i w^m phi22'
LowJet dual_phi_lowjet(const AdmissiblePhi& phi);
// dual family, opposite sign, by fixed-point iteration
AdmissiblePhi dual_phi_full(const AdmissiblePhi& phi);
// coefficientwise conjugate, opposite sign
AdmissiblePhi conjugate_phi(const AdmissiblePhi& phi);

struct RealStructureData {
    USeries a, b, c;
    int m = 1;
};

P0Ode build_real(const RealStructureData& data);

struct ExtractResult {
    bool ok = false;
    RealStructureData data;
    std::string violation;  // empty when ok
    int degree = -1;
};
ExtractResult extract_real(const P0Ode& ode);

struct RealityOptions {
    TriSeries::Truncs truncs{4, 4, kExact};  // etab box defaults to the ODE truncation
};
Report reality_check(const P0Ode& ode, int m, Sign sign, const RealityOptions& opt = {});

Json to_json(const AdmissiblePhi& phi);
AdmissiblePhi phi_from_json(const Json& j);
Json to_json(const RealStructureData& d);

}  // namespace segrekit
