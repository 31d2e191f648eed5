#pragma once

#include "paralift/error.hpp"
#include "paralift/fppoly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace paralift::core {

// F_{p^k} = F_p[t]/(m) with m the lexicographically least monic irreducible
// of degree k, coefficient tuples ordered constant-first. Deterministic so
// element enumeration and golden outputs are reproducible.
class FqField {
  public:
    // Cached accessor; fields are immutable and shared.
    static std::shared_ptr<const FqField> get(long p, int k);

    long p() const { return p_; }
    int k() const { return k_; }
    long q() const { return q_; }
    const FpPoly& modulus() const { return modulus_; }

    using Elem = std::vector<long>; // length k, entries in [0, p)

    Elem zero() const { return Elem(static_cast<size_t>(k_), 0); }
    Elem one() const;
    Elem from_int(long v) const; // embeds F_p
    Elem gen() const;            // the class of t

    bool is_zero(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem inv(const Elem& a) const;
    Elem pow(Elem a, long e) const;

    // Enumeration in constant-first lexicographic order; index in [0, q).
    Elem elem_at(long index) const;
    long index_of(const Elem& a) const;

    std::string str(const Elem& a) const; // e.g. "2t + 1"

  private:
    FqField(long p, int k);
    long p_;
    int k_;
    long q_;
    FpPoly modulus_;
};

using FqElem = FqField::Elem;

// Exact root set of y^2 + b y = c, size 0, 1 or 2. Characteristic 2 goes
// through F_2-linear algebra; odd characteristic through Tonelli-Shanks.
std::vector<FqElem> solve_quadratic(const FqField& F, const FqElem& b, const FqElem& c);

// Roots of an IntPoly in F (by scan; fields here are small).
std::vector<FqElem> fq_roots(const FqField& F, const IntPoly& f);

} // namespace paralift::core
