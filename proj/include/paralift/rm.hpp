#pragma once

#include <gmpxx.h>

#include <string>

namespace paralift::quad {

// Element a + b*e of Z[sqrt(2)], e = sqrt(2). This is the coefficient ring
// of the newform; the nontrivial ring automorphism tau sends e to -e.
struct RmElement {
    mpz_class a;
    mpz_class b;

    RmElement() : a(0), b(0) {}
    RmElement(mpz_class a_, mpz_class b_) : a(std::move(a_)), b(std::move(b_)) {}

    bool operator==(const RmElement& o) const { return a == o.a && b == o.b; }
    bool operator!=(const RmElement& o) const { return !(*this == o); }

    RmElement operator+(const RmElement& o) const { return {a + o.a, b + o.b}; }
    RmElement operator-(const RmElement& o) const { return {a - o.a, b - o.b}; }
    RmElement operator-() const { return {-a, -b}; }
    RmElement operator*(const RmElement& o) const {
        return {a * o.a + 2 * b * o.b, a * o.b + b * o.a};
    }

    RmElement tau() const { return {a, -b}; }

    // Norm to Z: a^2 - 2 b^2.
    mpz_class norm() const { return a * a - 2 * b * b; }

    std::string str() const;
};

// Reduction modulo the prime lambda_2 = (e) of Z[sqrt(2)]: the residue field
// is F_2 and x = a + b*e maps to a mod 2.
int rm_reduce_lambda2(const RmElement& x);

} // namespace paralift::quad
