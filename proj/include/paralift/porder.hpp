#pragma once

#include <gmpxx.h>

#include "paralift/error.hpp"
#include "paralift/intpoly.hpp"

namespace paralift::core {

PARALIFT_ERROR(CertificateError);

// Outcome of the p-maximal-order computation for Q[x]/(f): p is unramified
// in the maximal order iff O_pmax/pO_pmax is etale (zero radical). index is
// the p-part of [O_pmax : Z[alpha]], a witness that the enlargement really
// moved past the polynomial order when the naive discriminant test is
// inconclusive.
struct UnramifiedCertificate {
    long p = 0;
    bool unramified = false;
    mpz_class index;
    // Number of simple factors of O_pmax/pO_pmax, i.e. of primes above p,
    // read off as dim ker(Frob - id). Meaningful only when unramified.
    int residue_factor_count = 0;
};

// Round-2 at a single prime. f must be monic, irreducible over Q and
// squarefree mod checks are the caller's business; p must be prime.
UnramifiedCertificate certify_unramified(const IntPoly& f, long p);

} // namespace paralift::core
