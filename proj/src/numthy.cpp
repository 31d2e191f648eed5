#include "paralift/numthy.hpp"

namespace paralift::core {

int kronecker(const mpz_class& d, const mpz_class& n) {
    if (n < 1) throw Error("kronecker: n must be positive");
    if (n == 1) return 1;
    mpz_class a = d, m = n;
    int result = 1;
    // Split off the even part of the denominator: (a|2) is 0 for even a,
    // +1 for a = +-1 mod 8, -1 for a = +-3 mod 8.
    if (mpz_even_p(m.get_mpz_t())) {
        if (mpz_even_p(a.get_mpz_t())) return 0;
        unsigned long twos = 0;
        while (mpz_even_p(m.get_mpz_t())) {
            m /= 2;
            ++twos;
        }
        if (twos % 2 == 1) {
            mpz_class r8 = ((a % 8) + 8) % 8;
            if (r8 == 3 || r8 == 5) result = -result;
        }
    }
    if (m == 1) return result;
    // Jacobi symbol (a|m) for odd m > 1 by reciprocity.
    a = ((a % m) + m) % m;
    while (a != 0) {
        while (mpz_even_p(a.get_mpz_t())) {
            a /= 2;
            mpz_class r8 = m % 8;
            if (r8 == 3 || r8 == 5) result = -result;
        }
        std::swap(a, m);
        if (a % 4 == 3 && m % 4 == 3) result = -result;
        a %= m;
    }
    return m == 1 ? result : 0;
}

bool is_prime(const mpz_class& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (mpz_even_p(n.get_mpz_t())) return false;
    for (mpz_class d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

bool is_prime(long n) { return is_prime(mpz_class(n)); }

bool is_squarefree(const mpz_class& n) {
    mpz_class m = abs(n);
    if (m == 0) return false;
    for (mpz_class d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return false;
        }
    }
    return true;
}

bool is_fundamental_disc(const mpz_class& D) {
    if (D == 1 || D == 0) return false;
    mpz_class r4 = ((D % 4) + 4) % 4;
    if (r4 == 1) return is_squarefree(D);
    if (r4 != 0) return false;
    mpz_class q = D / 4;
    mpz_class qr4 = ((q % 4) + 4) % 4;
    return (qr4 == 2 || qr4 == 3) && is_squarefree(q);
}

mpz_class fundamental_disc_of(const mpz_class& d) {
    if (d == 0 || d == 1) throw Error("fundamental_disc_of: d must be a nonsquare integer");
    // Strip the square part first so non-squarefree descriptors still work.
    mpz_class core = d < 0 ? mpz_class(-1) : mpz_class(1);
    mpz_class m = abs(d);
    for (mpz_class p = 2; p * p <= m; ++p) {
        while (m % (p * p) == 0) m /= p * p;
        if (m % p == 0) {
            core *= p;
            m /= p;
        }
    }
    core *= m;
    if (core == 1) throw Error("fundamental_disc_of: d is a perfect square");
    mpz_class r4 = ((core % 4) + 4) % 4;
    return r4 == 1 ? core : mpz_class(4 * core);
}

unsigned class_number_imag_quad(const mpz_class& D) {
    if (D >= 0 || !is_fundamental_disc(D))
        throw NotFundamental("class_number_imag_quad: not a negative fundamental discriminant: " +
                             D.get_str());
    unsigned count = 0;
    // Reduced forms have 0 <= b <= a <= c with b = D mod 2; a <= sqrt(|D|/3).
    for (mpz_class b = ((D % 2) + 2) % 2; 3 * b * b <= -D; b += 2) {
        mpz_class m4 = b * b - D; // = 4ac
        mpz_class m = m4 / 4;
        for (mpz_class a = std::max(b, mpz_class(1)); a * a <= m; ++a) {
            if (m % a != 0) continue;
            // c = m/a >= a; forms (a, +-b, c) are reduced, with b >= 0
            // forced on the boundary |b| = a or a = c.
            if (b == 0 || b == a || a * a == m)
                count += 1;
            else
                count += 2;
        }
    }
    return count;
}

std::vector<long> primes_below(long bound) {
    std::vector<long> out;
    if (bound <= 2) return out;
    std::vector<bool> sieve(static_cast<size_t>(bound), true);
    for (long i = 2; i < bound; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        out.push_back(i);
        for (long j = i * 2; j < bound; j += i) sieve[static_cast<size_t>(j)] = false;
    }
    return out;
}

std::vector<long> prime_support(const mpz_class& n) {
    std::vector<long> out;
    mpz_class m = abs(n);
    if (m <= 1) return out;
    for (long p = 2; mpz_class(p) * p <= m; p = (p == 2 ? 3 : p + 2)) {
        if (m % p == 0) {
            out.push_back(p);
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) {
        if (!m.fits_slong_p()) throw Error("prime_support: cofactor too large: " + m.get_str());
        out.push_back(m.get_si());
    }
    return out;
}

} // namespace paralift::core
