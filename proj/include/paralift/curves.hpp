#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "paralift/error.hpp"
#include "paralift/fq.hpp"
#include "paralift/intpoly.hpp"
#include "paralift/quad.hpp"

namespace paralift::curves {

PARALIFT_ERROR(SchemaError);
PARALIFT_ERROR(RamifiedPrime);
PARALIFT_ERROR(SingularModel);
PARALIFT_ERROR(InconsistentCounts);

// Genus-2 model y^2 = F(x) over Q, deg F in {5, 6}, disc(F) != 0.
struct CurveQ {
    core::IntPoly F;
};

// Genus-2 model y^2 + Q(x) y = P(x) over K = Q(sqrt(D)), coefficients u + v*w
// stored as integer pairs, deg P <= 6, deg Q <= 3; the attached sextic
// Q^2 + 4P must have degree >= 5 and nonzero discriminant.
struct CurveK {
    long D = -223;
    std::vector<std::pair<mpz_class, mpz_class>> P, Q; // ascending
};

// Document format: {model: "y2=F" | "y2+Qy=P", base: "Q" | "K(disc)",
// coefficient lists ascending (integers for F, [u, v] pairs for P and Q)}.
CurveQ load_curve_Q(const std::string& json_text);
CurveK load_curve_K(const std::string& json_text);

// A curve y^2 + Q y = P with coefficients in a concrete small field.
struct ReducedCurve {
    std::shared_ptr<const core::FqField> F;
    std::vector<core::FqElem> P, Q; // ascending, trailing zeros trimmed
};

// Reduction of C at fp into the degree-m extension of the residue field:
// w goes to w_image (split) or to the lexicographically first root of
// w_minpoly in F_{p^2m} (inert; the root choice does not affect counts).
ReducedCurve reduce_curve(const CurveK& C, const quad::PrimeOfK& fp, int m = 1);
// The rational model reduced mod p (as y^2 + 0*y = F).
ReducedCurve reduce_curve(const CurveQ& C, long p, int m = 1);

// Good-reduction test: in odd characteristic the sextic Q^2 + 4P must be
// squarefree of degree >= 5; in characteristic 2 no affine point may
// satisfy Q = Q'^2 P + P'^2 = 0 and the chart at infinity is checked via
// the reversed model.
bool is_smooth(const ReducedCurve& C);

// Points on the smooth projective model: affine solutions of
// y^2 + Q(x)y = P(x) plus the roots of y^2 + q3 y = p6 at infinity.
long count_points(const ReducedCurve& C);

struct LPoly {
    long q = 0;
    core::IntPoly poly; // ascending: 1 + c1 x + c2 x^2 + q c1 x^3 + q^2 x^4
};

// Assemble the L-polynomial from counts over F_q and F_{q^2}; the functional
// equation fixes c3, c4. InconsistentCounts when c2 is non-integral or a
// reciprocal root leaves the circle |x| = q^{-1/2} (exact sign tests).
LPoly lpoly_from_counts(long n1, long n2, long q);

// Count over F_{N(fp)} and F_{N(fp)^2} and assemble; SingularModel if the
// reduction is not smooth.
LPoly curve_lpoly(const CurveK& C, const quad::PrimeOfK& fp);

// x^deg * f(1/x): the monic quartic of an LPoly, comparable with q_poly.
core::IntPoly poly_reverse(const core::IntPoly& f, int deg);

} // namespace paralift::curves
