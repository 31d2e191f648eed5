#pragma once

#include <string>
#include <vector>

#include "paralift/error.hpp"
#include "paralift/intpoly.hpp"
#include "paralift/quad.hpp"
#include "paralift/rm.hpp"

namespace paralift::bianchi {

PARALIFT_ERROR(SchemaError);
PARALIFT_ERROR(OddWeight);
PARALIFT_ERROR(NontrivialCharacter);
PARALIFT_ERROR(UnknownPrime);

// A cuspidal newform over an imaginary quadratic field, carried as its Hecke
// eigenvalue table with coefficients in Z[sqrt(2)]. Immutable after load.
struct BianchiNewform {
    quad::ImagQuadField field;
    mpz_class level_norm;
    int weight = 2;

    struct Entry {
        quad::PrimeOfK prime;
        quad::RmElement a;
    };
    std::vector<Entry> entries; // document order

    const Entry* find(const std::string& canonical_tag) const;
    // The stored eigenvalue at fp; UnknownPrime if absent.
    const quad::RmElement& eigenvalue(const quad::PrimeOfK& fp) const;
};

// Parse a newform document. Keys: field_discriminant, level_norm, weight,
// character ("trivial"), coefficient_ring ("Z[sqrt2]"), entries [{tag,a,b}]
// with eigenvalue a + b*e. Split primes must appear in conjugate pairs.
BianchiNewform load_newform(const std::string& json_text);

// Degree <= 2 Euler factor over K, ascending in x = N(P)^(-s).
struct EulerFactorK {
    quad::PrimeOfK prime;
    std::vector<quad::RmElement> poly; // 1 - a_P x + N(P) x^2, or 1 - a_P x at bad P
};

EulerFactorK euler_factor_K(const BianchiNewform& f, const quad::PrimeOfK& fp);

// Monic integer quartic (x^2 - a_P x + N)(x^2 - tau(a_P) x + N); equals
// x^4 Qhat(1/x) for the Euler-numerator product Qhat.
core::IntPoly q_poly(const BianchiNewform& f, const quad::PrimeOfK& fp);
// Same, from the raw eigenvalue and norm.
core::IntPoly q_poly(const quad::RmElement& a, const mpz_class& N);

// f^sigma = f^tau audit: each split entry's conjugate must carry tau(a),
// inert and ramified entries must be tau-fixed.
struct SigmaTauResult {
    bool ok = true;
    std::vector<long> offending; // rational primes under the failures
};
SigmaTauResult check_sigma_tau(const BianchiNewform& f);

} // namespace paralift::bianchi
