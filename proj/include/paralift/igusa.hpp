#pragma once

#include <gmpxx.h>

#include <vector>

#include "paralift/curves.hpp"
#include "paralift/error.hpp"
#include "paralift/intpoly.hpp"
#include "paralift/quad.hpp"

namespace paralift::curves {

PARALIFT_ERROR(DegenerateSextic);
PARALIFT_ERROR(NonRationalInvariants);

// Exact arithmetic in K = Q(w) with w^2 = t*w - c (t the trace of w).
struct KRing {
    mpq_class t, c;
    explicit KRing(const quad::ImagQuadField& K);
};

struct KElem {
    mpq_class u, v; // u + v*w
    KElem() : u(0), v(0) {}
    KElem(mpq_class u_, mpq_class v_) : u(std::move(u_)), v(std::move(v_)) {}
};

bool k_is_zero(const KElem& x);
KElem k_add(const KElem& a, const KElem& b);
KElem k_sub(const KElem& a, const KElem& b);
KElem k_mul(const KRing& R, const KElem& a, const KElem& b);
KElem k_inv(const KRing& R, const KElem& a);

// Polynomials over K, ascending coefficients.
using KPoly = std::vector<KElem>;
int k_poly_deg(const KPoly& f); // trailing zeros ignored; -1 for zero

// The model sextic Q^2 + 4P of a curve over K, ascending.
KPoly curve_sextic(const CurveK& C);

KElem k_poly_disc(const KRing& R, const KPoly& f);

// Classical binary-sextic invariants, weighted-projective weights (1:2:3:5);
// scaling the sextic by u scales the tuple by (u^2, u^4, u^6, u^10).
struct IgusaClebsch {
    mpq_class I2, I4, I6, I10;
    bool operator==(const IgusaClebsch& o) const {
        return I2 == o.I2 && I4 == o.I4 && I6 == o.I6 && I10 == o.I10;
    }
};

// Invariants of a degree-5 or -6 polynomial viewed as a binary sextic
// (degree 5 means the x^6 coefficient vanishes). A repeated root is legal
// and yields I10 = 0.
IgusaClebsch igusa_clebsch(const core::IntPoly& sextic);
// Invariants of the model sextic: 4F for y^2 = F.
IgusaClebsch igusa_clebsch(const CurveQ& C);
// Invariants of Q^2 + 4P, which must come out rational for a curve with
// rational moduli; NonRationalInvariants otherwise.
IgusaClebsch igusa_clebsch(const CurveK& C);

// Delta = 2^-12 * I10 of the model sextic; 1 for the bundled curve over K.
mpq_class curve_discriminant(const CurveQ& C);
mpq_class curve_discriminant(const CurveK& C);

// Weighted-projective comparison: true iff b = (u I2, u^2 I4, u^3 I6, u^5 I10)
// of a for some nonzero rational u (returned); zeros must match in position.
struct WpEquivalence {
    bool equivalent = false;
    mpq_class u;
};
WpEquivalence wp_equivalent(const IgusaClebsch& a, const IgusaClebsch& b);

} // namespace paralift::curves
