#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "paralift/bianchi.hpp"
#include "paralift/error.hpp"

namespace paralift::lift {

PARALIFT_ERROR(RamifiedUnsupported);
PARALIFT_ERROR(NonRationalInert);
PARALIFT_ERROR(SymmetryViolation);
PARALIFT_ERROR(BadArgument);

// Local spinor factor at a rational prime, ascending in x = p^(-s).
// Degree 4 at valuation 0, degree 3 at valuation 1, degree 2 at
// valuation >= 2. Coefficients are exact rationals: the classical
// normalization at weight 2 introduces p^(k-3) = 1/p.
struct SpinorFactor {
    long p = 0;
    std::vector<mpq_class> poly; // constant term 1
    int valuation_case = 0;      // 0, 1, or 2 meaning ">= 2"
};

// Arakawa-normalized eigenvalue triple: T(p) -> lambda, T(1,p,p,p^2) -> mu,
// and the paramodular Atkin-Lehner U_p -> epsilon at bad p.
struct ArakawaEigen {
    long p = 0;
    mpq_class lambda, mu;
    std::optional<int> epsilon; // present iff valuation_case >= 1
};

// N = D^2 * level_norm; BadDiscriminant unless D is fundamental negative.
mpz_class paramodular_level(long D, const mpz_class& level_norm);

// The degree-4 factor at an unramified p, assembled from the entries above p:
// split p gives (1 - a_P x + p x^2)(1 - tau(a_P) x + p x^2) with integer
// coefficients, inert p gives 1 - a_P x^2 + p^2 x^4 (NonRationalInert if the
// stored a_P is not tau-fixed). RamifiedUnsupported when p | D: the bundled
// data does not determine the degree <= 2 local factor there.
SpinorFactor spinor_factor(const bianchi::BianchiNewform& f, long p);

// Invert the valuation-0 shape
//   1 - lambda x + (p mu + p^(k-1) + p^(k-3)) x^2 - p^(k-1) lambda x^3
//     + p^(2k-2) x^4
// for even k. SymmetryViolation unless c0 = 1, c3 = p^(k-1) c1 and
// c4 = p^(2k-2).
ArakawaEigen arakawa_eigen(const SpinorFactor& S, int k);

// The valuation-0 shape above from (lambda, mu); inverse of arakawa_eigen.
SpinorFactor build_factor_val0(const mpq_class& lambda, const mpq_class& mu,
                               long p, int k);

// The bad-prime shapes: valuation 1 gives
//   1 - (lambda + p^(k/2-2) epsilon) x + (p mu + p^(k-1)) x^2
//     + epsilon p^(3k/2-2) x^3,
// valuation >= 2 gives 1 - lambda x + (p mu + p^(k-1)) x^2.
// BadArgument unless epsilon is +1 or -1 and valuation_case is 1 or 2.
SpinorFactor build_factor_val_ge1(const mpq_class& lambda, const mpq_class& mu,
                                  int epsilon, long p, int k,
                                  int valuation_case);

// Shape of the completed-L functional equation; nothing here is evaluated
// numerically. The sign is a product of local epsilons, and the local sign
// at primes dividing D is not determined by the bundled data.
struct FuncEqMeta {
    int gamma_exponent = 2;
    mpz_class conductor;
    std::vector<long> epsilon_unknown_at;
};

FuncEqMeta func_eq_meta(const bianchi::BianchiNewform& f);

} // namespace paralift::lift
