#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace paralift::core {

// Dense univariate polynomial over Z. Coefficients ascending; canonical form
// has no trailing zeros, so the zero polynomial is the empty vector.
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    // Coefficient of x^i; zero beyond the degree.
    const mpz_class& coeff(int i) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class leading() const { return c_.empty() ? mpz_class(0) : c_.back(); }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    IntPoly derivative() const;
    mpz_class eval(const mpz_class& x) const;

    // Canonical display, descending powers: "x^4 + 2x^3 + 3x^2 + 4x + 4".
    std::string str(const std::string& var = "x") const;

  private:
    std::vector<mpz_class> c_;
    void trim();
};

IntPoly int_poly_scale(const mpz_class& s, const IntPoly& f);

// Resultant of f and g via fraction-free (Bareiss) elimination on the
// Sylvester matrix; exact over Z.
mpz_class resultant(const IntPoly& f, const IntPoly& g);

// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f). Zero signals a repeated root.
mpz_class poly_disc(const IntPoly& f);

} // namespace paralift::core
