#include "paralift/fq.hpp"

#include "paralift/numthy.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace paralift::core {

namespace {

bool fp_is_irreducible(const FpPoly& m, long p) {
    const int k = fp_deg(m);
    if (k == 1) return true;
    // No roots in F_p.
    for (long x = 0; x < p; ++x) {
        long acc = 0;
        for (int i = k; i >= 0; --i) acc = (acc * x + m[static_cast<size_t>(i)]) % p;
        if (acc == 0) return false;
    }
    if (k <= 3) return true;
    // Degree 4: also exclude irreducible quadratic factors.
    for (long c1 = 0; c1 < p; ++c1) {
        for (long c0 = 0; c0 < p; ++c0) {
            FpPoly g = fp_trim({c0, c1, 1});
            bool g_has_root = false;
            for (long x = 0; x < p && !g_has_root; ++x)
                g_has_root = ((x * x + c1 * x + c0) % p == 0);
            if (g_has_root) continue;
            if (fp_deg(fp_gcd(m, g, p)) > 0) return false;
        }
    }
    return true;
}

FpPoly least_irreducible(long p, int k) {
    // Constant-first tuple order: (c_0, ..., c_{k-1}) ascending, c_0 major.
    long total = 1;
    for (int i = 0; i < k; ++i) total *= p;
    for (long idx = 0; idx < total; ++idx) {
        FpPoly m(static_cast<size_t>(k) + 1, 0);
        m[static_cast<size_t>(k)] = 1;
        // Digits of idx big-endian are (c_0, ..., c_{k-1}): c_0 most significant.
        long rest = idx;
        for (int i = k - 1; i >= 0; --i) {
            m[static_cast<size_t>(i)] = rest % p;
            rest /= p;
        }
        if (fp_is_irreducible(m, p)) return m;
    }
    throw Error("least_irreducible: none found (impossible for prime p)");
}

} // namespace

FqField::FqField(long p, int k) : p_(p), k_(k) {
    if (k < 1 || k > 4) throw Error("FqField: extension degree must be in [1, 4]");
    if (!is_prime(p)) throw Error("FqField: p must be prime");
    q_ = 1;
    for (int i = 0; i < k; ++i) {
        if (q_ > 1000000 / p) throw Error("FqField: field too large");
        q_ *= p;
    }
    modulus_ = least_irreducible(p, k);
}

std::shared_ptr<const FqField> FqField::get(long p, int k) {
    static std::mutex mu;
    static std::map<std::pair<long, int>, std::shared_ptr<const FqField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto field = std::shared_ptr<const FqField>(new FqField(p, k));
    cache[key] = field;
    return field;
}

FqElem FqField::one() const { return from_int(1); }

FqElem FqField::from_int(long v) const {
    Elem e = zero();
    e[0] = ((v % p_) + p_) % p_;
    return e;
}

FqElem FqField::gen() const {
    Elem e = zero();
    if (k_ == 1) {
        // t reduces to the unique root of the degree-1 modulus.
        e[0] = ((p_ - modulus_[0]) % p_ + p_) % p_;
    } else {
        e[1] = 1;
    }
    return e;
}

bool FqField::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](long c) { return c == 0; });
}

FqElem FqField::add(const Elem& a, const Elem& b) const {
    Elem r(a);
    for (int i = 0; i < k_; ++i) r[static_cast<size_t>(i)] = (a[static_cast<size_t>(i)] + b[static_cast<size_t>(i)]) % p_;
    return r;
}

FqElem FqField::sub(const Elem& a, const Elem& b) const {
    Elem r(a);
    for (int i = 0; i < k_; ++i)
        r[static_cast<size_t>(i)] = ((a[static_cast<size_t>(i)] - b[static_cast<size_t>(i)]) % p_ + p_) % p_;
    return r;
}

FqElem FqField::neg(const Elem& a) const { return sub(zero(), a); }

FqElem FqField::mul(const Elem& a, const Elem& b) const {
    FpPoly prod = fp_rem(fp_mul(fp_trim(a), fp_trim(b), p_), modulus_, p_);
    Elem r = zero();
    for (size_t i = 0; i < prod.size(); ++i) r[i] = prod[i];
    return r;
}

FqElem FqField::inv(const Elem& a) const {
    if (is_zero(a)) throw Error("FqField::inv: zero element");
    // Extended Euclid in F_p[t] against the modulus.
    FpPoly r0 = modulus_, r1 = fp_trim(a);
    FpPoly s0 = {}, s1 = {1};
    while (!r1.empty()) {
        // Compute quotient r0 / r1.
        FpPoly q(std::max<size_t>(r0.size(), 1), 0);
        FpPoly rem = r0;
        const long lead_inv = fp_inv(r1.back(), p_);
        while (fp_deg(rem) >= fp_deg(r1)) {
            long c = (rem.back() * lead_inv) % p_;
            size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = ((rem[shift + i] - c * r1[i]) % p_ + p_) % p_;
            rem = fp_trim(std::move(rem));
        }
        q = fp_trim(std::move(q));
        r0 = r1;
        r1 = rem;
        FpPoly snew = fp_sub(s0, fp_mul(q, s1, p_), p_);
        s0 = s1;
        s1 = snew;
    }
    if (fp_deg(r0) != 0) throw Error("FqField::inv: modulus not irreducible?");
    long scale = fp_inv(r0[0], p_);
    Elem r = zero();
    for (size_t i = 0; i < s0.size(); ++i) r[i] = (s0[i] * scale) % p_;
    return r;
}

FqElem FqField::pow(Elem a, long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Elem result = one();
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

FqElem FqField::elem_at(long index) const {
    if (index < 0 || index >= q_) throw Error("FqField::elem_at: index out of range");
    Elem e = zero();
    // Constant-first lex order: c_0 is the most significant digit.
    for (int i = k_ - 1; i >= 0; --i) {
        e[static_cast<size_t>(i)] = index % p_;
        index /= p_;
    }
    return e;
}

long FqField::index_of(const Elem& a) const {
    long idx = 0;
    for (int i = 0; i < k_; ++i) idx = idx * p_ + a[static_cast<size_t>(i)];
    return idx;
}

std::string FqField::str(const Elem& a) const {
    if (is_zero(a)) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = k_ - 1; i >= 0; --i) {
        long c = a[static_cast<size_t>(i)];
        if (c == 0) continue;
        if (!first) os << " + ";
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c;
            os << "t";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

bool fq_is_square(const FqField& F, const FqElem& a) {
    if (F.is_zero(a)) return true;
    return F.is_zero(F.sub(F.pow(a, (F.q() - 1) / 2), F.one()));
}

// Tonelli-Shanks in F_q, odd q. Returns one square root of a (a must be a QR).
FqElem fq_sqrt(const FqField& F, const FqElem& a) {
    if (F.is_zero(a)) return a;
    long q = F.q();
    long m = q - 1, e = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++e;
    }
    // Deterministic non-residue scan in enumeration order.
    FqElem z = F.one();
    for (long i = 1; i < q; ++i) {
        z = F.elem_at(i);
        if (!F.is_zero(z) && !fq_is_square(F, z)) break;
    }
    FqElem x = F.pow(a, (m + 1) / 2);
    FqElem b = F.pow(a, m);
    FqElem g = F.pow(z, m);
    long r = e;
    while (true) {
        long mm = 0;
        FqElem t = b;
        while (!F.is_zero(F.sub(t, F.one()))) {
            t = F.mul(t, t);
            ++mm;
        }
        if (mm == 0) return x;
        FqElem gs = g;
        for (long i = 0; i < r - mm - 1; ++i) gs = F.mul(gs, gs);
        x = F.mul(x, gs);
        g = F.mul(gs, gs);
        b = F.mul(b, g);
        r = mm;
    }
}

} // namespace

std::vector<FqElem> solve_quadratic(const FqField& F, const FqElem& b, const FqElem& c) {
    std::vector<FqElem> roots;
    if (F.p() == 2) {
        const int k = F.k();
        if (F.is_zero(b)) {
            // y^2 = c has the unique root c^(2^(k-1)) (inverse Frobenius).
            FqElem y = c;
            for (int i = 0; i < k - 1; ++i) y = F.mul(y, y);
            roots.push_back(y);
            return roots;
        }
        // y = b z turns y^2 + b y = c into z^2 + z = c / b^2; solve the
        // F_2-linear system for z (kernel of z -> z^2 + z is {0, 1}).
        FqElem rhs = F.mul(c, F.inv(F.mul(b, b)));
        std::vector<std::vector<long>> cols;
        for (int i = 0; i < k; ++i) {
            FqElem ei = F.zero();
            ei[static_cast<size_t>(i)] = 1;
            cols.push_back(F.add(F.mul(ei, ei), ei));
        }
        // Gaussian elimination on the k x k system cols * z = rhs over F_2.
        std::vector<std::vector<long>> aug(static_cast<size_t>(k), std::vector<long>(static_cast<size_t>(k) + 1, 0));
        for (int row = 0; row < k; ++row) {
            for (int col = 0; col < k; ++col) aug[static_cast<size_t>(row)][static_cast<size_t>(col)] = cols[static_cast<size_t>(col)][static_cast<size_t>(row)];
            aug[static_cast<size_t>(row)][static_cast<size_t>(k)] = rhs[static_cast<size_t>(row)];
        }
        std::vector<int> pivot_col(static_cast<size_t>(k), -1);
        int rank = 0;
        for (int col = 0; col < k && rank < k; ++col) {
            int piv = -1;
            for (int row = rank; row < k; ++row)
                if (aug[static_cast<size_t>(row)][static_cast<size_t>(col)]) {
                    piv = row;
                    break;
                }
            if (piv < 0) continue;
            std::swap(aug[static_cast<size_t>(rank)], aug[static_cast<size_t>(piv)]);
            for (int row = 0; row < k; ++row) {
                if (row != rank && aug[static_cast<size_t>(row)][static_cast<size_t>(col)]) {
                    for (int j = 0; j <= k; ++j)
                        aug[static_cast<size_t>(row)][static_cast<size_t>(j)] ^= aug[static_cast<size_t>(rank)][static_cast<size_t>(j)];
                }
            }
            pivot_col[static_cast<size_t>(rank)] = col;
            ++rank;
        }
        for (int row = rank; row < k; ++row)
            if (aug[static_cast<size_t>(row)][static_cast<size_t>(k)]) return roots; // inconsistent: no roots
        FqElem z = F.zero();
        for (int row = 0; row < rank; ++row)
            z[static_cast<size_t>(pivot_col[static_cast<size_t>(row)])] = aug[static_cast<size_t>(row)][static_cast<size_t>(k)];
        FqElem y0 = F.mul(b, z);
        FqElem y1 = F.mul(b, F.add(z, F.one()));
        roots.push_back(y0);
        roots.push_back(y1);
    } else {
        // (y + b/2)^2 = c + b^2/4.
        FqElem half = F.inv(F.from_int(2));
        FqElem hb = F.mul(b, half);
        FqElem rhs = F.add(c, F.mul(hb, hb));
        if (F.is_zero(rhs)) {
            roots.push_back(F.neg(hb));
        } else if (fq_is_square(F, rhs)) {
            FqElem s = fq_sqrt(F, rhs);
            roots.push_back(F.sub(s, hb));
            roots.push_back(F.sub(F.neg(s), hb));
        }
    }
    // Canonical order for reproducible output.
    std::sort(roots.begin(), roots.end(),
              [&](const FqElem& x, const FqElem& y) { return F.index_of(x) < F.index_of(y); });
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

std::vector<FqElem> fq_roots(const FqField& F, const IntPoly& f) {
    std::vector<FqElem> roots;
    std::vector<FqElem> coeffs;
    for (int i = 0; i <= f.degree(); ++i) {
        mpz_class c = ((f.coeff(i) % F.p()) + F.p()) % F.p();
        coeffs.push_back(F.from_int(c.get_si()));
    }
    for (long i = 0; i < F.q(); ++i) {
        FqElem x = F.elem_at(i);
        FqElem acc = F.zero();
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
        if (F.is_zero(acc)) roots.push_back(x);
    }
    return roots;
}

} // namespace paralift::core
