#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "paralift/error.hpp"
#include "paralift/intpoly.hpp"

namespace paralift::quad {

PARALIFT_ERROR(BadDiscriminant);
PARALIFT_ERROR(MalformedTag);
PARALIFT_ERROR(NotAPrimeIdeal);
PARALIFT_ERROR(NotSplit);

// Imaginary quadratic field of fundamental discriminant D < 0 with ring of
// integers Z[w]: w = (1 + sqrt(D))/2 when D = 1 mod 4, w = sqrt(D)/2 when
// D = 0 mod 4. The bundled path uses D = -223.
struct ImagQuadField {
    long D;

    explicit ImagQuadField(long disc);

    // x^2 - x + (1-D)/4, or x^2 - D/4 in the even class.
    core::IntPoly w_minpoly() const;

    // trace of w: 1 in the odd class, 0 in the even class.
    int w_trace() const { return ((D % 4) + 4) % 4 == 1 ? 1 : 0; }
};

enum class SplitKind { Split, Inert, Ramified };

// A prime of K over the rational prime p. w_image is the residue of w mod
// the prime, present exactly when the residue degree is 1 (split, ramified).
struct PrimeOfK {
    long p = 0;
    SplitKind kind = SplitKind::Inert;
    std::optional<long> w_image;
    int w_trace = 1; // trace of w in O_K, needed to conjugate without the field
    mpz_class norm;
    std::string tag;

    bool operator==(const PrimeOfK& o) const { return tag == o.tag && p == o.p; }
};

struct SplittingResult {
    SplitKind kind;
    std::vector<PrimeOfK> primes; // two when split (w_image ascending), one otherwise
};

// Canonical display tag. Inert and ramified primes print as "[p]". A split
// odd prime prints as "[p, 2w+a]" with a = (-2 * w_image) mod p in [0, p)
// and "+0" omitted; the split primes above 2 print with the generator
// itself, "[2, w+1]" (w_image 1) and "[2, w+2]" (w_image 0).
std::string make_tag(long p, SplitKind kind, std::optional<long> w_image);

SplittingResult splitting(const ImagQuadField& K, long p);

// Parse "[p]", "[p, w+a]" or "[p, 2w+a]". Whitespace tolerant; the returned
// prime carries the canonical re-rendered tag. MalformedTag for syntax,
// NotAPrimeIdeal when the named ideal is not prime (composite p, generator
// not vanishing at a root of w_minpoly, or "[p]" for split p).
PrimeOfK parse_ideal_tag(const ImagQuadField& K, const std::string& tag);

// The Galois conjugate prime: w_image goes to trace(w) - w_image mod p.
PrimeOfK conj_prime(const PrimeOfK& fp);

} // namespace paralift::quad
