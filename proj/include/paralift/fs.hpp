#pragma once

#include <string>
#include <vector>

#include "paralift/bianchi.hpp"
#include "paralift/curves.hpp"
#include "paralift/error.hpp"
#include "paralift/porder.hpp"

namespace paralift::fs {

PARALIFT_ERROR(SchemaError);
PARALIFT_ERROR(UnexpectedType);
PARALIFT_ERROR(NotIrreducible);

// Conjugacy class of Frobenius in Gal(N/Q) = S3 acting regularly on itself;
// the trace of the corresponding GL2(F2) element is 1 exactly for ThreeCycle.
enum class S3Class { Identity, Transposition, ThreeCycle };

const char* s3_name(S3Class c);
int s3_trace(S3Class c);

// The degree-6 field cut out by the mod-2 representation, carried with its
// polynomial discriminant and the discriminant's prime support.
struct SexticField {
    core::IntPoly poly;
    mpz_class disc;
    std::vector<long> support; // primes dividing disc, ascending
};

// Validates degree 6 and nonzero discriminant, then certifies irreducibility
// over Q by exhibiting reduction types {2^3} and {3^2} at good primes (their
// degree subset-sums share only 0 and 6, so no proper rational factor can
// reduce compatibly with both). NotIrreducible when no certificate is found.
SexticField make_sextic_field(const core::IntPoly& poly);

// Parse {"poly": [c0..c6]} and build the field.
SexticField load_sextic(const std::string& json_text);

// Frobenius class at p from the degree multiset of poly mod p under the
// regular action: 1^6 -> Identity, 2^3 -> Transposition, 3^2 -> ThreeCycle.
// RamifiedPrime when p | disc; UnexpectedType for any other multiset.
S3Class s3_frobenius(const SexticField& N, long p);

// Class from the factor count of p in the maximal order: 6 -> Identity,
// 3 -> Transposition, 2 -> ThreeCycle. Works at index divisors where the
// polynomial multiset lies; the certificate must say unramified.
S3Class s3_class_from_certificate(const core::UnramifiedCertificate& cert);

struct ParityRow {
    long p = 0;
    S3Class cls = S3Class::Identity;
    int parity = 0; // a mod lambda_2 at a prime above p
    bool pass = false;
    std::string method; // "ddf" or "order-certificate"
};

// For each p: the mod-2 trace parity of the eigenvalue above p must be 1
// exactly when the Frobenius class is ThreeCycle. The same rule covers inert
// p, where Frob_P = (Frob_p)^2 and squaring preserves exactly the 3-cycles.
std::vector<ParityRow> parity_compatibility(const bianchi::BianchiNewform& f,
                                            const SexticField& N,
                                            const std::vector<long>& primes);

struct SieveElimination {
    long d = 0;
    mpz_class fund;   // fundamental discriminant attached to d
    long witness = 0; // smallest odd-trace prime inert in Q(sqrt d)
};

struct SieveResult {
    std::vector<long> survivors; // ascending
    std::vector<SieveElimination> eliminated;
};

// d is eliminated iff kronecker(fund(d), p) = -1 for some listed prime:
// odd trace forces Frobenius of order 3, which lies in the index-2 subgroup
// fixing the quadratic subfield, so such p cannot be inert there.
SieveResult quad_subfield_sieve(const std::vector<long>& d_list,
                                const std::vector<long>& odd_trace_primes);

std::vector<long> ramification_support(const SexticField& N);

struct SurjectivityResult {
    bool pass = false;
    std::vector<std::string> reasons; // empty when pass
};

// (i) some eigenvalue has odd parity (an order-3 element in the image);
// (ii) 3 does not divide h (no unramified cyclic cubic, so no order-3-only
// image). h is the class number of the base field.
SurjectivityResult residual_surjectivity(const bianchi::BianchiNewform& f,
                                         unsigned h);

struct EulerRow {
    std::string tag;
    mpz_class norm;
    bool pass = false;
    std::string expected; // monic quartic from the eigenvalue table
    std::string computed; // reversed L-polynomial from point counts
};

struct FSReport {
    std::string assumption;
    bool sigma_tau_ok = false;
    std::vector<long> sigma_tau_offending;
    bool twist_compatible = false;
    std::vector<EulerRow> euler_matches;
    std::vector<ParityRow> parity_matches;
    std::vector<long> skipped_parity_primes; // structural exclusions, with 2 first
    SieveResult sieve;
    long sieve_expected_survivor = 0; // squarefree part of disc(N)
    bool sieve_ok = false;
    bool sextic_irreducible = false;
    std::vector<long> support; // ramification_support(N)
    bool support_in_target = false; // support subset of {2, 223}
    std::vector<core::UnramifiedCertificate> certificates; // for support outside the target
    bool refined_support_ok = false;
    bool surjectivity_pass = false;
    std::vector<std::string> surjectivity_reasons;
    std::string error; // nonempty when a sub-step aborted the run
    bool overall = false;
};

// The orchestrated verification: sigma-tau symmetry, exact Euler-factor
// matches at every prime of the table and above T, parity compatibility,
// the quadratic-subfield sieve with data-derived odd-trace primes, sextic
// ramification support (refined by maximal-order certificates), residual
// surjectivity. Any sub-error produces a partial report with `error` set.
FSReport fs_verify(const bianchi::BianchiNewform& f, const curves::CurveK& C_K,
                   const curves::CurveQ& C_Q, const SexticField& N,
                   const std::vector<long>& T);

// Deterministic renderings with stable ordering; byte-identical on
// identical inputs.
std::string render_report(const FSReport& R);
std::string render_report_json(const FSReport& R);

} // namespace paralift::fs
