#include "paralift/porder.hpp"

#include <algorithm>
#include <vector>

#include "paralift/numthy.hpp"

namespace paralift::core {

namespace {

using QVec = std::vector<mpq_class>;
using QMat = std::vector<QVec>;
using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;

QMat qmat_identity(size_t n) {
    QMat I(n, QVec(n, 0));
    for (size_t i = 0; i < n; ++i)
        I[i][i] = 1;
    return I;
}

QMat qmat_mul(const QMat& A, const QMat& B) {
    const size_t n = A.size(), m = B[0].size(), k = B.size();
    QMat C(n, QVec(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (A[i][t] == 0)
                continue;
            for (size_t j = 0; j < m; ++j)
                C[i][j] += A[i][t] * B[t][j];
        }
    return C;
}

QVec vec_mat(const QVec& v, const QMat& B) {
    const size_t n = B.size(), m = B[0].size();
    QVec r(m, 0);
    for (size_t i = 0; i < n; ++i) {
        if (v[i] == 0)
            continue;
        for (size_t j = 0; j < m; ++j)
            r[j] += v[i] * B[i][j];
    }
    return r;
}

QMat qmat_inv(QMat M) {
    const size_t n = M.size();
    QMat R = qmat_identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw CertificateError("singular basis matrix");
        std::swap(M[piv], M[col]);
        std::swap(R[piv], R[col]);
        const mpq_class inv = 1 / M[col][col];
        for (size_t j = 0; j < n; ++j) {
            M[col][j] *= inv;
            R[col][j] *= inv;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0)
                continue;
            const mpq_class f = M[r][col];
            for (size_t j = 0; j < n; ++j) {
                M[r][j] -= f * M[col][j];
                R[r][j] -= f * R[col][j];
            }
        }
    }
    return R;
}

mpq_class qmat_det(QMat M) {
    const size_t n = M.size();
    mpq_class d = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = c;
        while (piv < n && M[piv][c] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != c) {
            std::swap(M[piv], M[c]);
            d = -d;
        }
        d *= M[c][c];
        const mpq_class inv = 1 / M[c][c];
        for (size_t r = c + 1; r < n; ++r) {
            if (M[r][c] == 0)
                continue;
            const mpq_class f = M[r][c] * inv;
            for (size_t j = c; j < n; ++j)
                M[r][j] -= f * M[c][j];
        }
    }
    return d;
}

// Product of two power-basis vectors modulo the monic polynomial f.
QVec poly_mulmod(const QVec& a, const QVec& b, const QVec& f) {
    const size_t n = f.size() - 1;
    QVec out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    while (out.size() > n) {
        const mpq_class lead = out.back();
        const size_t d = out.size() - 1 - n;
        if (lead != 0)
            for (size_t i = 0; i <= n; ++i)
                out[d + i] -= lead * f[i];
        out.pop_back();
    }
    out.resize(n, 0);
    return out;
}

mpz_class q_to_z(const mpq_class& v) {
    if (v.get_den() != 1)
        throw CertificateError("non-integral coordinate in an order computation");
    return v.get_num();
}

long mod_p(const mpz_class& x, long p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_si();
}

long inv_mod(long a, long p) {
    long r = 1, base = ((a % p) + p) % p, e = p - 2;
    while (e) {
        if (e & 1)
            r = static_cast<long>((static_cast<unsigned long long>(r) * base) % p);
        base = static_cast<long>((static_cast<unsigned long long>(base) * base) % p);
        e >>= 1;
    }
    return r;
}

// Hermite form of an integer row lattice, full column rank; returns n rows
// with positive pivots and entries above each pivot reduced.
ZMat hnf_rows(ZMat rows, size_t n) {
    auto nonzero = [](const ZVec& r) {
        return std::any_of(r.begin(), r.end(), [](const mpz_class& x) { return x != 0; });
    };
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [&](const ZVec& r) { return !nonzero(r); }),
               rows.end());
    ZMat out;
    auto leading_at = [&](const ZVec& r, size_t col) {
        for (size_t c = 0; c < col; ++c)
            if (r[c] != 0)
                return false;
        return r[col] != 0;
    };
    for (size_t col = 0; col < n; ++col) {
        for (;;) {
            std::vector<size_t> cands;
            for (size_t i = 0; i < rows.size(); ++i)
                if (leading_at(rows[i], col))
                    cands.push_back(i);
            if (cands.size() <= 1)
                break;
            std::sort(cands.begin(), cands.end(), [&](size_t a, size_t b) {
                return abs(rows[a][col]) < abs(rows[b][col]);
            });
            const size_t a = cands[0];
            for (size_t t = 1; t < cands.size(); ++t) {
                const size_t b = cands[t];
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[b][col].get_mpz_t(),
                           rows[a][col].get_mpz_t());
                for (size_t j = 0; j < n; ++j)
                    rows[b][j] -= q * rows[a][j];
            }
            rows.erase(std::remove_if(rows.begin(), rows.end(),
                                      [&](const ZVec& r) { return !nonzero(r); }),
                       rows.end());
        }
        for (size_t i = 0; i < rows.size(); ++i)
            if (leading_at(rows[i], col)) {
                ZVec piv = rows[i];
                rows.erase(rows.begin() + static_cast<long>(i));
                if (piv[col] < 0)
                    for (auto& x : piv)
                        x = -x;
                out.push_back(std::move(piv));
                break;
            }
    }
    for (size_t i = out.size(); i-- > 0;) {
        size_t lead = 0;
        while (out[i][lead] == 0)
            ++lead;
        for (size_t j = 0; j < i; ++j) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), out[j][lead].get_mpz_t(),
                       out[i][lead].get_mpz_t());
            if (q != 0)
                for (size_t c = 0; c < n; ++c)
                    out[j][c] -= q * out[i][c];
        }
    }
    return out;
}

struct Order {
    QVec f;    // monic, ascending, degree n
    QMat basis; // rows are basis elements in power-basis coords
};

struct StepResult {
    Order next;
    bool changed = false;
    bool radical_zero = false;
};

// dim ker(phi - id) on O/pO for phi: x -> x^p; when O/pO is etale this
// counts the simple factors, i.e. the primes of the maximal order above p.
int frobenius_fixed_dim(const Order& O, long p) {
    const size_t n = O.f.size() - 1;
    const QMat& B = O.basis;
    const QMat Binv = qmat_inv(B);
    auto mulvec = [&](const QVec& uc, const QVec& vc) {
        const QVec u = vec_mat(uc, B), v = vec_mat(vc, B);
        return vec_mat(poly_mulmod(u, v, O.f), Binv);
    };
    QVec onec(n, 0);
    onec[0] = 1;
    onec = vec_mat(onec, Binv);

    std::vector<std::vector<long>> M(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        QVec ei(n, 0);
        ei[i] = 1;
        QVec res = onec, base = ei;
        long e = p;
        while (e) {
            if (e & 1)
                res = mulvec(res, base);
            base = mulvec(base, base);
            e >>= 1;
        }
        for (size_t j = 0; j < n; ++j) {
            long v = mod_p(q_to_z(res[j]), p);
            if (j == i)
                v = ((v - 1) % p + p) % p; // phi - id
            M[i][j] = v;
        }
    }
    size_t rank = 0;
    for (size_t c = 0; c < n && rank < n; ++c) {
        size_t piv = rank;
        while (piv < n && M[piv][c] % p == 0)
            ++piv;
        if (piv == n)
            continue;
        std::swap(M[rank], M[piv]);
        const long inv = inv_mod(M[rank][c], p);
        for (size_t j = 0; j < n; ++j)
            M[rank][j] = static_cast<long>(
                (static_cast<unsigned long long>(((M[rank][j] % p) + p) % p) * inv) % p);
        for (size_t i = 0; i < n; ++i) {
            if (i == rank || M[i][c] % p == 0)
                continue;
            const long f = ((M[i][c] % p) + p) % p;
            for (size_t j = 0; j < n; ++j)
                M[i][j] = static_cast<long>(
                    ((M[i][j] - static_cast<long long>(f) * M[rank][j]) % p + p) % p);
        }
        ++rank;
    }
    return static_cast<int>(n - rank);
}

// One enlargement step: radical of O/pO via the Frobenius kernel, then the
// multiplier ring of I = pO + radical inside (1/p)O.
StepResult radical_step(const Order& O, long p) {
    const size_t n = O.f.size() - 1;
    const QMat& B = O.basis;
    const QMat Binv = qmat_inv(B);

    auto mulvec = [&](const QVec& uc, const QVec& vc) {
        const QVec u = vec_mat(uc, B), v = vec_mat(vc, B);
        return vec_mat(poly_mulmod(u, v, O.f), Binv);
    };

    mpz_class pm = p;
    while (pm < static_cast<long>(n))
        pm *= p;

    QVec onec(n, 0);
    onec[0] = 1;
    onec = vec_mat(onec, Binv);

    auto powvec = [&](QVec base, mpz_class e) {
        QVec res = onec;
        while (e != 0) {
            if (mpz_odd_p(e.get_mpz_t()))
                res = mulvec(res, base);
            base = mulvec(base, base);
            e >>= 1;
        }
        return res;
    };

    // Frobenius on O/pO in order coordinates.
    std::vector<std::vector<long>> frob(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        QVec ei(n, 0);
        ei[i] = 1;
        const QVec fc = powvec(ei, pm);
        for (size_t j = 0; j < n; ++j)
            frob[i][j] = mod_p(q_to_z(fc[j]), p);
    }

    // Kernel of x -> x*frob over F_p, tracking row operations on identity.
    std::vector<std::vector<long>> A = frob;
    std::vector<std::vector<long>> T(n, std::vector<long>(n, 0));
    for (size_t i = 0; i < n; ++i)
        T[i][i] = 1;
    size_t rank = 0;
    for (size_t c = 0; c < n && rank < n; ++c) {
        size_t piv = rank;
        while (piv < n && A[piv][c] % p == 0)
            ++piv;
        if (piv == n)
            continue;
        std::swap(A[rank], A[piv]);
        std::swap(T[rank], T[piv]);
        const long inv = inv_mod(A[rank][c], p);
        for (size_t j = 0; j < n; ++j) {
            A[rank][j] = static_cast<long>(
                (static_cast<unsigned long long>(((A[rank][j] % p) + p) % p) * inv) % p);
            T[rank][j] = static_cast<long>(
                (static_cast<unsigned long long>(((T[rank][j] % p) + p) % p) * inv) % p);
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == rank || A[i][c] % p == 0)
                continue;
            const long f = ((A[i][c] % p) + p) % p;
            for (size_t j = 0; j < n; ++j) {
                A[i][j] = static_cast<long>(
                    ((A[i][j] - static_cast<long long>(f) * A[rank][j]) % p + p) % p);
                T[i][j] = static_cast<long>(
                    ((T[i][j] - static_cast<long long>(f) * T[rank][j]) % p + p) % p);
            }
        }
        ++rank;
    }
    std::vector<std::vector<long>> kernel(T.begin() + static_cast<long>(rank), T.end());

    StepResult out;
    out.radical_zero = kernel.empty();

    // I = pO + <kernel lifts> as an integer lattice in order coordinates.
    ZMat irows;
    for (size_t i = 0; i < n; ++i) {
        ZVec r(n, 0);
        r[i] = p;
        irows.push_back(std::move(r));
    }
    for (const auto& k : kernel) {
        ZVec r(n);
        for (size_t j = 0; j < n; ++j)
            r[j] = ((k[j] % p) + p) % p;
        irows.push_back(std::move(r));
    }
    const ZMat I = hnf_rows(std::move(irows), n);

    QMat Imat(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            Imat[i][j] = mpq_class(I[i][j]);
    const QMat Iinv = qmat_inv(Imat);

    // Multiplier ring O' = {x in (1/p)O : x I <= I}. With x = (1/p) sum t_i e_i,
    // each condition row demands sum_i t_i * (e_i g_j in I-coords) = 0 mod p.
    std::vector<std::vector<long>> conds;
    for (size_t gj = 0; gj < n; ++gj) {
        QVec gc(n);
        for (size_t j = 0; j < n; ++j)
            gc[j] = mpq_class(I[gj][j]);
        QMat Mj(n);
        for (size_t i = 0; i < n; ++i) {
            QVec ei(n, 0);
            ei[i] = 1;
            Mj[i] = vec_mat(mulvec(ei, gc), Iinv);
        }
        for (size_t col = 0; col < n; ++col) {
            std::vector<long> row(n);
            for (size_t i = 0; i < n; ++i)
                row[i] = mod_p(q_to_z(Mj[i][col]), p);
            conds.push_back(std::move(row));
        }
    }

    // Kernel of the condition matrix over F_p.
    const size_t ncond = conds.size();
    std::vector<size_t> pivcols;
    size_t r = 0;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = r;
        while (piv < ncond && conds[piv][c] % p == 0)
            ++piv;
        if (piv == ncond)
            continue;
        std::swap(conds[r], conds[piv]);
        const long inv = inv_mod(conds[r][c], p);
        for (size_t j = 0; j < n; ++j)
            conds[r][j] = static_cast<long>(
                (static_cast<unsigned long long>(((conds[r][j] % p) + p) % p) * inv) % p);
        for (size_t i = 0; i < ncond; ++i) {
            if (i == r || conds[i][c] % p == 0)
                continue;
            const long f = ((conds[i][c] % p) + p) % p;
            for (size_t j = 0; j < n; ++j)
                conds[i][j] = static_cast<long>(
                    ((conds[i][j] - static_cast<long long>(f) * conds[r][j]) % p + p) % p);
        }
        pivcols.push_back(c);
        ++r;
    }
    std::vector<std::vector<long>> kern;
    for (size_t c = 0; c < n; ++c) {
        if (std::find(pivcols.begin(), pivcols.end(), c) != pivcols.end())
            continue;
        std::vector<long> v(n, 0);
        v[c] = 1;
        for (size_t ri = 0; ri < pivcols.size(); ++ri)
            v[pivcols[ri]] = ((-conds[ri][c]) % p + p) % p;
        kern.push_back(std::move(v));
    }

    // O' = O + (1/p)<kern>: HNF the p-scaled lattice, then divide by p.
    ZMat latrows;
    for (size_t i = 0; i < n; ++i) {
        ZVec row(n, 0);
        row[i] = p;
        latrows.push_back(std::move(row));
    }
    for (const auto& v : kern) {
        ZVec row(n);
        for (size_t j = 0; j < n; ++j)
            row[j] = v[j];
        latrows.push_back(std::move(row));
    }
    const ZMat Hn = hnf_rows(std::move(latrows), n);

    QMat coords(n, QVec(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            coords[i][j] = mpq_class(Hn[i][j]) / p;
            coords[i][j].canonicalize();
            if (coords[i][j].get_den() != 1)
                out.changed = true;
        }

    out.next.f = O.f;
    out.next.basis = qmat_mul(coords, B);
    return out;
}

} // namespace

UnramifiedCertificate certify_unramified(const IntPoly& f, long p) {
    const int deg = f.degree();
    if (deg < 1)
        throw CertificateError("polynomial must be nonconstant");
    if (f.leading() != 1)
        throw CertificateError("polynomial must be monic");
    if (!is_prime(p))
        throw CertificateError("modulus must be prime");

    Order O;
    O.f.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs())
        O.f.emplace_back(c);
    O.basis = qmat_identity(static_cast<size_t>(deg));

    for (int iter = 0; iter < 64; ++iter) {
        StepResult s = radical_step(O, p);
        if (!s.changed)
            break;
        O = std::move(s.next);
    }
    const StepResult fin = radical_step(O, p);

    UnramifiedCertificate cert;
    cert.p = p;
    cert.unramified = fin.radical_zero;
    if (fin.radical_zero)
        cert.residue_factor_count = frobenius_fixed_dim(O, p);
    const mpq_class idx = 1 / qmat_det(O.basis);
    mpz_class num = idx.get_num();
    if (num < 0)
        num = -num;
    if (idx.get_den() != 1)
        throw CertificateError("order index must be integral");
    cert.index = num;
    return cert;
}

} // namespace paralift::core
