#pragma once

#include "paralift/error.hpp"
#include "paralift/intpoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace paralift::core {

PARALIFT_ERROR(NotSquarefree);
PARALIFT_ERROR(LeadingCoefficientVanishes);

// Dense polynomials over F_p, coefficients ascending in [0, p), no trailing
// zeros. p must be an odd-word prime (p^2 fits in long long).
using FpPoly = std::vector<long>;

FpPoly fp_reduce(const IntPoly& f, long p);
FpPoly fp_trim(FpPoly f);
int fp_deg(const FpPoly& f); // -1 for zero
FpPoly fp_add(const FpPoly& a, const FpPoly& b, long p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, long p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p);
FpPoly fp_rem(FpPoly a, const FpPoly& m, long p);
FpPoly fp_divexact(const FpPoly& a, const FpPoly& b, long p);
FpPoly fp_gcd(FpPoly a, FpPoly b, long p); // monic
FpPoly fp_deriv(const FpPoly& f, long p);
FpPoly fp_monic(FpPoly f, long p);
FpPoly fp_powmod(FpPoly base, long e, const FpPoly& m, long p);
long fp_inv(long a, long p);

// Multiset of irreducible-factor degrees with multiplicities.
struct FactorizationType {
    std::map<int, int> counts; // degree -> number of factors
    int total() const;
    bool operator==(const FactorizationType& o) const { return counts == o.counts; }
    std::string str() const; // e.g. "1^2 2^2" for two linear and two quadratic factors
};

// Degree multiset of f mod p by distinct-degree factorization. Requires f
// squarefree mod p; refuses degree drop.
FactorizationType ddf_type(const IntPoly& f, long p);

} // namespace paralift::core
