#pragma once

#include <gmpxx.h>

#include "paralift/error.hpp"
#include "paralift/igusa.hpp"

namespace paralift::curves {

PARALIFT_ERROR(DegenerateParameters);

// A point on the rational parametrization of the Humbert surface of
// discriminant 8: genus-2 moduli whose Jacobian has real multiplication
// by Z[sqrt(2)]. The parameters also carry a square root z of z_squared
// on the double cover where the multiplication is defined.
struct HumbertPoint {
    mpq_class r, s;
    mpq_class z_squared;
    IgusaClebsch ic;
};

// DegenerateParameters when r = 0 or s = 0.
HumbertPoint humbert_point(const mpq_class& r, const mpq_class& s);

} // namespace paralift::curves
