#pragma once

#include "paralift/error.hpp"

#include <gmpxx.h>

#include <vector>

namespace paralift::core {

PARALIFT_ERROR(NotFundamental);

// Standard Kronecker symbol (d|n) for n >= 1, fully multiplicative in n,
// with the usual 2-adic and sign conventions.
int kronecker(const mpz_class& d, const mpz_class& n);

// Trial-division primality; desk scale only.
bool is_prime(const mpz_class& n);
bool is_prime(long n);

bool is_squarefree(const mpz_class& n);

// True iff D is a fundamental discriminant (positive or negative, not 1).
bool is_fundamental_disc(const mpz_class& D);

// Fundamental discriminant of Q(sqrt(d)) for a nonsquare integer d.
mpz_class fundamental_disc_of(const mpz_class& d);

// Count of reduced binary quadratic forms (a,b,c) of discriminant D < 0:
// b^2 - 4ac = D, |b| <= a <= c, b >= 0 whenever |b| = a or a = c.
unsigned class_number_imag_quad(const mpz_class& D);

// Primes in [2, bound), ascending.
std::vector<long> primes_below(long bound);

// Prime support of n by trial division. Throws if a composite cofactor
// survives the trial bound (cannot happen at desk scale inputs).
std::vector<long> prime_support(const mpz_class& n);

} // namespace paralift::core
