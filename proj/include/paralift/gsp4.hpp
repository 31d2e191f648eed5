#pragma once

#include <gmpxx.h>

#include <array>

#include "paralift/error.hpp"

namespace paralift::lift {

PARALIFT_ERROR(NotSimilitude);

// 4x4 matrix with exact rational entries; membership in GSp4 is established
// by the similitude check, not at construction.
struct GSp4Matrix {
    std::array<std::array<mpq_class, 4>, 4> m{};

    bool operator==(const GSp4Matrix& o) const { return m == o.m; }
};

using Mat2 = std::array<std::array<mpq_class, 2>, 2>;

GSp4Matrix gsp4_identity();
// The symplectic form: rows (0,0,1,0),(0,0,0,1),(-1,0,0,0),(0,-1,0,0).
GSp4Matrix gsp4_j();

GSp4Matrix gsp4_mul(const GSp4Matrix& A, const GSp4Matrix& B);

// nu with M^t J M = nu J exactly and nu != 0; NotSimilitude otherwise.
mpq_class gsp4_similitude(const GSp4Matrix& M);

// Image of the archimedean j: antidiagonal (1, 1, s, s), s = (-1)^(k-1),
// as rows (0,0,0,1),(0,0,1,0),(0,s,0,0),(s,0,0,0).
GSp4Matrix lparam_arch_j(int k);

// The nonsplit-prime parameter value at g0 = (0 1 / a0-normalized):
// rows (0,1,0,0),(a0,0,b0,0),(0,0,0,1),(c0,0,d0,0).
GSp4Matrix lparam_phi_g0(const mpq_class& a0, const mpq_class& b0,
                         const mpq_class& c0, const mpq_class& d0);

// Split-prime parameter: M1 acting on coordinates {0,2}, M2 on {1,3}.
// The form restricts to a hyperbolic plane on each pair, so a similitude
// exists iff det(M1) = det(M2), and then nu is that determinant.
GSp4Matrix lparam_split_interleave(const Mat2& M1, const Mat2& M2);

} // namespace paralift::lift
