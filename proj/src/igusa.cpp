#include "paralift/igusa.hpp"

#include <algorithm>
#include <utility>

namespace paralift::curves {

KRing::KRing(const quad::ImagQuadField& K) {
    const auto mp = K.w_minpoly(); // x^2 - t*x + c, ascending {c, -t, 1}
    c = mpq_class(mp.coeff(0));
    t = mpq_class(-mp.coeff(1));
}

bool k_is_zero(const KElem& x) { return x.u == 0 && x.v == 0; }

KElem k_add(const KElem& a, const KElem& b) { return {a.u + b.u, a.v + b.v}; }
KElem k_sub(const KElem& a, const KElem& b) { return {a.u - b.u, a.v - b.v}; }

KElem k_mul(const KRing& R, const KElem& a, const KElem& b) {
    // (u1 + v1 w)(u2 + v2 w), w^2 = t w - c
    const mpq_class vv = a.v * b.v;
    return {a.u * b.u - vv * R.c, a.u * b.v + a.v * b.u + vv * R.t};
}

KElem k_inv(const KRing& R, const KElem& a) {
    // conjugate of w is t - w; norm = u^2 + t u v + c v^2
    const mpq_class n = a.u * a.u + R.t * a.u * a.v + R.c * a.v * a.v;
    if (n == 0)
        throw NonRationalInvariants("division by zero in K");
    return {(a.u + a.v * R.t) / n, -a.v / n};
}

int k_poly_deg(const KPoly& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
        if (!k_is_zero(f[static_cast<size_t>(i)]))
            return i;
    return -1;
}

KPoly curve_sextic(const CurveK& C) {
    auto at = [](const std::vector<std::pair<mpz_class, mpz_class>>& v, size_t i) {
        return i < v.size() ? KElem(mpq_class(v[i].first), mpq_class(v[i].second))
                            : KElem();
    };
    const KRing R{quad::ImagQuadField(C.D)};
    KPoly s(7);
    for (size_t i = 0; i <= 3; ++i)
        for (size_t j = 0; j <= 3; ++j)
            s[i + j] = k_add(s[i + j], k_mul(R, at(C.Q, i), at(C.Q, j)));
    for (size_t i = 0; i <= 6; ++i) {
        const KElem p = at(C.P, i);
        s[i] = k_add(s[i], KElem(4 * p.u, 4 * p.v));
    }
    return s;
}

KElem k_poly_disc(const KRing& R, const KPoly& f) {
    const int d = k_poly_deg(f);
    if (d < 1)
        throw DegenerateSextic("discriminant needs degree >= 1");
    KPoly g(f.begin(), f.begin() + d + 1);
    KPoly gp(static_cast<size_t>(d));
    for (int i = 1; i <= d; ++i)
        gp[static_cast<size_t>(i - 1)] =
            KElem(mpq_class(i) * g[static_cast<size_t>(i)].u,
                  mpq_class(i) * g[static_cast<size_t>(i)].v);
    // Sylvester matrix of g (deg d) and g' (deg d-1), size 2d-1.
    const int n = 2 * d - 1;
    std::vector<std::vector<KElem>> M(static_cast<size_t>(n),
                                      std::vector<KElem>(static_cast<size_t>(n)));
    for (int row = 0; row < d - 1; ++row)
        for (int i = 0; i <= d; ++i)
            M[static_cast<size_t>(row)][static_cast<size_t>(row + d - i)] =
                g[static_cast<size_t>(i)];
    for (int row = 0; row < d; ++row)
        for (int i = 0; i <= d - 1; ++i)
            M[static_cast<size_t>(d - 1 + row)][static_cast<size_t>(row + d - 1 - i)] =
                gp[static_cast<size_t>(i)];
    // Determinant by Gaussian elimination over the field K.
    KElem det{1, 0};
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!k_is_zero(M[static_cast<size_t>(r)][static_cast<size_t>(col)])) {
                piv = r;
                break;
            }
        if (piv < 0)
            return {0, 0};
        if (piv != col) {
            std::swap(M[static_cast<size_t>(piv)], M[static_cast<size_t>(col)]);
            det = KElem(-det.u, -det.v);
        }
        const KElem pv = M[static_cast<size_t>(col)][static_cast<size_t>(col)];
        det = k_mul(R, det, pv);
        const KElem pvi = k_inv(R, pv);
        for (int r = col + 1; r < n; ++r) {
            const KElem factor =
                k_mul(R, M[static_cast<size_t>(r)][static_cast<size_t>(col)], pvi);
            if (k_is_zero(factor))
                continue;
            for (int cc = col; cc < n; ++cc)
                M[static_cast<size_t>(r)][static_cast<size_t>(cc)] =
                    k_sub(M[static_cast<size_t>(r)][static_cast<size_t>(cc)],
                          k_mul(R, factor,
                                M[static_cast<size_t>(col)][static_cast<size_t>(cc)]));
        }
    }
    // disc = (-1)^{d(d-1)/2} Res(g, g') / lc(g); Res = det of the Sylvester matrix.
    KElem res = k_mul(R, det, k_inv(R, g[static_cast<size_t>(d)]));
    if ((d * (d - 1) / 2) % 2 != 0)
        res = KElem(-res.u, -res.v);
    return res;
}

namespace {

// Generic binary-form machinery over a commutative ring R, used with
// exact rationals and with elements of K. A form of degree m is stored
// x-major: a[i] is the coefficient of x^(m-i) y^i, 0 <= i <= m.

struct QOps {
    using R = mpq_class;
    static R zero() { return {}; }
    R add(const R& a, const R& b) const { return a + b; }
    R sub(const R& a, const R& b) const { return a - b; }
    R mul(const R& a, const R& b) const { return a * b; }
    R scale(const mpq_class& s, const R& a) const { return s * a; }
    static bool is_zero(const R& a) { return a == 0; }
};

struct KOps {
    KRing ring;
    using R = KElem;
    static R zero() { return {}; }
    R add(const R& a, const R& b) const { return k_add(a, b); }
    R sub(const R& a, const R& b) const { return k_sub(a, b); }
    R mul(const R& a, const R& b) const { return k_mul(ring, a, b); }
    R scale(const mpq_class& s, const R& a) const { return {s * a.u, s * a.v}; }
    static bool is_zero(const R& a) { return k_is_zero(a); }
};

template <class Ops>
using Form = std::vector<typename Ops::R>; // size = deg + 1

template <class Ops>
Form<Ops> deriv_x(const Ops& ops, const Form<Ops>& f) {
    const int m = static_cast<int>(f.size()) - 1;
    if (m == 0)
        return {Ops::zero()};
    Form<Ops> r(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        r[static_cast<size_t>(i)] = ops.scale(m - i, f[static_cast<size_t>(i)]);
    return r;
}

template <class Ops>
Form<Ops> deriv_y(const Ops& ops, const Form<Ops>& f) {
    const int m = static_cast<int>(f.size()) - 1;
    if (m == 0)
        return {Ops::zero()};
    Form<Ops> r(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i)
        r[static_cast<size_t>(i - 1)] = ops.scale(i, f[static_cast<size_t>(i)]);
    return r;
}

template <class Ops>
Form<Ops> form_mul(const Ops& ops, const Form<Ops>& a, const Form<Ops>& b) {
    Form<Ops> r(a.size() + b.size() - 1, Ops::zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = ops.add(r[i + j], ops.mul(a[i], b[j]));
    return r;
}

mpz_class factorial(int n) {
    mpz_class r = 1;
    for (int i = 2; i <= n; ++i)
        r *= i;
    return r;
}

mpz_class binom(int n, int k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return r;
}

// r-th transvectant of forms of degrees m and n:
// ((m-r)! (n-r)!) / (m! n!) * sum_k (-1)^k C(r,k)
//   * d^r g / dx^(r-k) dy^k * d^r h / dx^k dy^(r-k)
template <class Ops>
Form<Ops> transvectant(const Ops& ops, const Form<Ops>& g, const Form<Ops>& h,
                       int r) {
    const int m = static_cast<int>(g.size()) - 1;
    const int n = static_cast<int>(h.size()) - 1;
    // Precompute pure-x derivative chains, then apply y-derivatives.
    Form<Ops> acc(static_cast<size_t>(m + n - 2 * r) + 1, Ops::zero());
    for (int k = 0; k <= r; ++k) {
        Form<Ops> dg = g;
        for (int i = 0; i < r - k; ++i)
            dg = deriv_x(ops, dg);
        for (int i = 0; i < k; ++i)
            dg = deriv_y(ops, dg);
        Form<Ops> dh = h;
        for (int i = 0; i < k; ++i)
            dh = deriv_x(ops, dh);
        for (int i = 0; i < r - k; ++i)
            dh = deriv_y(ops, dh);
        Form<Ops> term = form_mul(ops, dg, dh);
        mpq_class sign = binom(r, k);
        if (k % 2 != 0)
            sign = -sign;
        for (size_t i = 0; i < acc.size() && i < term.size(); ++i)
            acc[i] = ops.add(acc[i], ops.scale(sign, term[i]));
    }
    const mpq_class norm = mpq_class(factorial(m - r) * factorial(n - r)) /
                           mpq_class(factorial(m) * factorial(n));
    for (auto& e : acc)
        e = ops.scale(norm, e);
    return acc;
}

template <class Ops>
struct RawInvariants {
    typename Ops::R I2, I4, I6, I10;
};

// Clebsch covariant chain for a binary sextic f:
//   A=(f,f)_6  i=(f,f)_4  Delta=(i,i)_2  B=(i,i)_4  C=(i,Delta)_4
//   y1=(f,i)_4  y2=(i,y1)_2  y3=(i,y2)_2  D=(y3,y1)_2
template <class Ops>
RawInvariants<Ops> invariants_of_form(const Ops& ops, const Form<Ops>& f) {
    const auto A = transvectant(ops, f, f, 6).at(0);
    const auto i = transvectant(ops, f, f, 4);
    const auto Delta = transvectant(ops, i, i, 2);
    const auto B = transvectant(ops, i, i, 4).at(0);
    const auto C = transvectant(ops, i, Delta, 4).at(0);
    const auto y1 = transvectant(ops, f, i, 4);
    const auto y2 = transvectant(ops, i, y1, 2);
    const auto y3 = transvectant(ops, i, y2, 2);
    const auto D = transvectant(ops, y3, y1, 2).at(0);

    auto sc = [&](long s, const typename Ops::R& x) { return ops.scale(mpq_class(s), x); };
    const auto A2 = ops.mul(A, A);
    const auto A3 = ops.mul(A2, A);
    const auto A5 = ops.mul(A3, A2);
    RawInvariants<Ops> out;
    out.I2 = sc(-120, A);
    out.I4 = ops.add(sc(-720, A2), sc(6750, B));
    out.I6 = ops.add(ops.add(sc(8640, A3), sc(-108000, ops.mul(A, B))),
                     sc(202500, C));
    out.I10 = ops.add(
        ops.add(ops.add(sc(-62208, A5), sc(972000, ops.mul(A3, B))),
                ops.add(sc(1620000, ops.mul(A2, C)),
                        sc(-3037500, ops.mul(A, ops.mul(B, B))))),
        ops.add(sc(-6075000, ops.mul(B, C)), sc(-4556250, D)));
    return out;
}

template <class Ops>
Form<Ops> homogenize_sextic(const Form<Ops>& ascending) {
    // ascending[i] (i <= 6) is the x^i coefficient; binary coeff of
    // x^(6-j) y^j is ascending[6-j].
    Form<Ops> f(7, Ops::zero());
    for (size_t j = 0; j <= 6; ++j)
        if (6 - j < ascending.size())
            f[j] = ascending[6 - j];
    return f;
}

} // namespace

IgusaClebsch igusa_clebsch(const core::IntPoly& sextic) {
    const int d = sextic.degree();
    if (d != 5 && d != 6)
        throw DegenerateSextic("binary-sextic invariants need degree 5 or 6");
    QOps ops;
    Form<QOps> asc(static_cast<size_t>(d) + 1);
    for (int i = 0; i <= d; ++i)
        asc[static_cast<size_t>(i)] = mpq_class(sextic.coeff(i));
    const auto raw = invariants_of_form(ops, homogenize_sextic<QOps>(asc));
    return {raw.I2, raw.I4, raw.I6, raw.I10};
}

IgusaClebsch igusa_clebsch(const CurveQ& C) {
    return igusa_clebsch(core::int_poly_scale(4, C.F));
}

IgusaClebsch igusa_clebsch(const CurveK& C) {
    const KPoly s = curve_sextic(C);
    const int d = k_poly_deg(s);
    if (d != 5 && d != 6)
        throw DegenerateSextic("binary-sextic invariants need degree 5 or 6");
    const KOps ops{KRing{quad::ImagQuadField(C.D)}};
    Form<KOps> asc(s.begin(), s.begin() + d + 1);
    const auto raw = invariants_of_form(ops, homogenize_sextic<KOps>(asc));
    for (const KElem* e : {&raw.I2, &raw.I4, &raw.I6, &raw.I10})
        if (e->v != 0)
            throw NonRationalInvariants("invariant has a nonzero w-component");
    return {raw.I2.u, raw.I4.u, raw.I6.u, raw.I10.u};
}

mpq_class curve_discriminant(const CurveQ& C) {
    return igusa_clebsch(C).I10 / mpq_class(4096);
}

mpq_class curve_discriminant(const CurveK& C) {
    return igusa_clebsch(C).I10 / mpq_class(4096);
}

namespace {

// Exact n-th root of a rational, if it exists.
bool mpq_nth_root(const mpq_class& x, int n, mpq_class& out) {
    if (x == 0) {
        out = 0;
        return true;
    }
    mpq_class y = x;
    bool neg = false;
    if (y < 0) {
        if (n % 2 == 0)
            return false;
        neg = true;
        y = -y;
    }
    mpz_class num, den;
    const int okn = mpz_root(num.get_mpz_t(), y.get_num().get_mpz_t(),
                             static_cast<unsigned long>(n));
    const int okd = mpz_root(den.get_mpz_t(), y.get_den().get_mpz_t(),
                             static_cast<unsigned long>(n));
    if (!okn || !okd)
        return false;
    out = mpq_class(num) / mpq_class(den);
    if (neg)
        out = -out;
    return true;
}

} // namespace

WpEquivalence wp_equivalent(const IgusaClebsch& a, const IgusaClebsch& b) {
    const mpq_class* av[4] = {&a.I2, &a.I4, &a.I6, &a.I10};
    const mpq_class* bv[4] = {&b.I2, &b.I4, &b.I6, &b.I10};
    const int weight[4] = {1, 2, 3, 5};
    for (int i = 0; i < 4; ++i)
        if ((*av[i] == 0) != (*bv[i] == 0))
            return {};
    std::vector<mpq_class> candidates;
    if (a.I2 != 0) {
        candidates.push_back(b.I2 / a.I2);
    } else if (a.I4 != 0) {
        mpq_class r;
        if (!mpq_nth_root(b.I4 / a.I4, 2, r))
            return {};
        candidates.push_back(r);
        candidates.push_back(-r);
    } else if (a.I6 != 0) {
        mpq_class r;
        if (!mpq_nth_root(b.I6 / a.I6, 3, r))
            return {};
        candidates.push_back(r);
    } else if (a.I10 != 0) {
        mpq_class r;
        if (!mpq_nth_root(b.I10 / a.I10, 5, r))
            return {};
        candidates.push_back(r);
    } else {
        return {true, 1}; // both tuples identically zero
    }
    for (const auto& u : candidates) {
        if (u == 0)
            continue;
        bool ok = true;
        mpq_class up[6]; // u^1 .. u^5
        up[1] = u;
        for (int e = 2; e <= 5; ++e)
            up[e] = up[e - 1] * u;
        for (int i = 0; i < 4 && ok; ++i)
            ok = (*bv[i] == up[weight[i]] * *av[i]);
        if (ok)
            return {true, u};
    }
    return {};
}

} // namespace paralift::curves
