#include "paralift/fppoly.hpp"

#include <sstream>

namespace paralift::core {

FpPoly fp_trim(FpPoly f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
    return f;
}

int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fp_reduce(const IntPoly& f, long p) {
    FpPoly r(f.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) {
        mpz_class c = ((f.coeff(static_cast<int>(i)) % p) + p) % p;
        r[i] = c.get_si();
    }
    return fp_trim(std::move(r));
}

FpPoly fp_add(const FpPoly& a, const FpPoly& b, long p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
    return fp_trim(std::move(r));
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, long p) {
    FpPoly r(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] = ((r[i] - b[i]) % p + p) % p;
    return fp_trim(std::move(r));
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return fp_trim(std::move(r));
}

long fp_inv(long a, long p) {
    long t = 0, newt = 1, r = p, newr = ((a % p) + p) % p;
    while (newr != 0) {
        long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw Error("fp_inv: not invertible");
    return ((t % p) + p) % p;
}

FpPoly fp_rem(FpPoly a, const FpPoly& m, long p) {
    if (m.empty()) throw Error("fp_rem: zero modulus");
    const long lead_inv = fp_inv(m.back(), p);
    while (fp_deg(a) >= fp_deg(m)) {
        long c = (a.back() * lead_inv) % p;
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i)
            a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
        a = fp_trim(std::move(a));
    }
    return a;
}

FpPoly fp_divexact(const FpPoly& a, const FpPoly& b, long p) {
    if (b.empty()) throw Error("fp_divexact: division by zero");
    FpPoly rem = a, q(a.size(), 0);
    const long lead_inv = fp_inv(b.back(), p);
    while (fp_deg(rem) >= fp_deg(b)) {
        long c = (rem.back() * lead_inv) % p;
        size_t shift = rem.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i)
            rem[shift + i] = ((rem[shift + i] - c * b[i]) % p + p) % p;
        rem = fp_trim(std::move(rem));
    }
    if (!rem.empty()) throw Error("fp_divexact: not divisible");
    return fp_trim(std::move(q));
}

FpPoly fp_monic(FpPoly f, long p) {
    if (f.empty()) return f;
    long inv = fp_inv(f.back(), p);
    for (auto& c : f) c = (c * inv) % p;
    return f;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
    while (!b.empty()) {
        a = fp_rem(std::move(a), b, p);
        std::swap(a, b);
    }
    return fp_monic(std::move(a), p);
}

FpPoly fp_deriv(const FpPoly& f, long p) {
    if (f.size() <= 1) return {};
    FpPoly r(f.size() - 1);
    for (size_t i = 1; i < f.size(); ++i) r[i - 1] = (f[i] * static_cast<long>(i % p)) % p;
    return fp_trim(std::move(r));
}

FpPoly fp_powmod(FpPoly base, long e, const FpPoly& m, long p) {
    FpPoly result{1};
    base = fp_rem(std::move(base), m, p);
    while (e > 0) {
        if (e & 1) result = fp_rem(fp_mul(result, base, p), m, p);
        base = fp_rem(fp_mul(base, base, p), m, p);
        e >>= 1;
    }
    return result;
}

int FactorizationType::total() const {
    int t = 0;
    for (auto [d, c] : counts) t += d * c;
    return t;
}

std::string FactorizationType::str() const {
    std::ostringstream os;
    bool first = true;
    for (auto [d, c] : counts) {
        if (!first) os << " ";
        os << d << "^" << c;
        first = false;
    }
    return first ? "1" : os.str();
}

FactorizationType ddf_type(const IntPoly& f, long p) {
    if (f.leading() % p == 0)
        throw LeadingCoefficientVanishes("ddf_type: p divides the leading coefficient, p = " +
                                         std::to_string(p));
    FpPoly fb = fp_monic(fp_reduce(f, p), p);
    FpPoly g = fp_gcd(fb, fp_deriv(fb, p), p);
    if (fp_deg(g) > 0)
        throw NotSquarefree("ddf_type: f mod " + std::to_string(p) + " is not squarefree");
    FactorizationType type;
    FpPoly x{0, 1};
    FpPoly h = x; // x^(p^d) mod the shrinking f
    for (int d = 1; 2 * d <= fp_deg(fb); ++d) {
        h = fp_powmod(std::move(h), p, fb, p);
        FpPoly common = fp_gcd(fp_sub(h, x, p), fb, p);
        if (fp_deg(common) > 0) {
            type.counts[d] += fp_deg(common) / d;
            fb = fp_divexact(fb, common, p);
            h = fp_rem(std::move(h), fb, p);
        }
    }
    if (fp_deg(fb) > 0) type.counts[fp_deg(fb)] += 1;
    return type;
}

} // namespace paralift::core
