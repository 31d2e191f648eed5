#include "paralift/curves.hpp"

#include <json.hpp>

#include <algorithm>

#include "paralift/igusa.hpp"
#include "paralift/numthy.hpp"

namespace paralift::curves {

using core::FqElem;
using core::FqField;
using nlohmann::json;

namespace {

json parse_doc(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& ex) {
        throw SchemaError(std::string("curve document is not valid JSON: ") + ex.what());
    }
}

mpz_class to_mpz(const json& v) {
    if (!v.is_number_integer()) throw SchemaError("coefficient must be an integer");
    return mpz_class(v.get<long>());
}

// Field-of-fractions polynomials over F_q for the smoothness tests.
using FqPoly = std::vector<FqElem>;

FqPoly fqp_trim(const FqField& F, FqPoly f) {
    while (!f.empty() && F.is_zero(f.back())) f.pop_back();
    return f;
}

int fqp_deg(const FqPoly& f) { return static_cast<int>(f.size()) - 1; }

FqPoly fqp_add(const FqField& F, const FqPoly& a, const FqPoly& b) {
    FqPoly r(std::max(a.size(), b.size()), F.zero());
    for (size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = F.add(r[i], a[i]);
        if (i < b.size()) r[i] = F.add(r[i], b[i]);
    }
    return fqp_trim(F, r);
}

FqPoly fqp_mul(const FqField& F, const FqPoly& a, const FqPoly& b) {
    if (a.empty() || b.empty()) return {};
    FqPoly r(a.size() + b.size() - 1, F.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    return fqp_trim(F, r);
}

FqPoly fqp_scale(const FqField& F, const FqElem& s, const FqPoly& a) {
    FqPoly r = a;
    for (auto& c : r) c = F.mul(c, s);
    return fqp_trim(F, r);
}

FqPoly fqp_rem(const FqField& F, FqPoly a, const FqPoly& b) {
    a = fqp_trim(F, std::move(a));
    FqElem lead_inv = F.inv(b.back());
    while (fqp_deg(a) >= fqp_deg(b)) {
        FqElem c = F.mul(a.back(), lead_inv);
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
        a = fqp_trim(F, std::move(a));
    }
    return a;
}

FqPoly fqp_gcd(const FqField& F, FqPoly a, FqPoly b) {
    a = fqp_trim(F, std::move(a));
    b = fqp_trim(F, std::move(b));
    while (!b.empty()) {
        FqPoly r = fqp_rem(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

FqPoly fqp_deriv(const FqField& F, const FqPoly& f) {
    FqPoly r;
    for (size_t i = 1; i < f.size(); ++i)
        r.push_back(F.mul(f[i], F.from_int(static_cast<long>(i))));
    return fqp_trim(F, r);
}

FqElem fqp_eval(const FqField& F, const FqPoly& f, const FqElem& x) {
    FqElem acc = F.zero();
    for (auto it = f.rbegin(); it != f.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
    return acc;
}

FqElem fqp_coeff(const FqField& F, const FqPoly& f, size_t i) {
    return i < f.size() ? f[i] : F.zero();
}

FqPoly fqp_reverse(const FqField& F, const FqPoly& f, size_t deg) {
    FqPoly r(deg + 1, F.zero());
    for (size_t i = 0; i < f.size() && i <= deg; ++i) r[deg - i] = f[i];
    return fqp_trim(F, r);
}

} // namespace

CurveQ load_curve_Q(const std::string& json_text) {
    json doc = parse_doc(json_text);
    if (!doc.is_object() || !doc.contains("model") || !doc.contains("base") || !doc.contains("F"))
        throw SchemaError("rational curve document needs model, base, F");
    if (doc["model"].get<std::string>() != "y2=F") throw SchemaError("model must be \"y2=F\"");
    if (doc["base"].get<std::string>() != "Q") throw SchemaError("base must be \"Q\"");
    if (!doc["F"].is_array()) throw SchemaError("F must be a coefficient array");
    std::vector<mpz_class> coeffs;
    for (const json& v : doc["F"]) coeffs.push_back(to_mpz(v));
    CurveQ C{core::IntPoly(std::move(coeffs))};
    if (C.F.degree() < 5 || C.F.degree() > 6) throw SchemaError("F must have degree 5 or 6");
    if (core::poly_disc(C.F) == 0) throw SchemaError("F has a repeated root");
    return C;
}

CurveK load_curve_K(const std::string& json_text) {
    json doc = parse_doc(json_text);
    if (!doc.is_object() || !doc.contains("model") || !doc.contains("base") || !doc.contains("P") || !doc.contains("Q"))
        throw SchemaError("curve document needs model, base, P, Q");
    if (doc["model"].get<std::string>() != "y2+Qy=P") throw SchemaError("model must be \"y2+Qy=P\"");
    const std::string base = doc["base"].get<std::string>();
    if (base.size() < 4 || base.rfind("K(", 0) != 0 || base.back() != ')')
        throw SchemaError("base must be \"K(disc)\"");
    CurveK C;
    C.D = std::stol(base.substr(2, base.size() - 3));
    quad::ImagQuadField K(C.D); // validates the discriminant
    for (const char* key : {"P", "Q"}) {
        if (!doc[key].is_array()) throw SchemaError(std::string(key) + " must be an array of [u, v] pairs");
        auto& target = (key[0] == 'P') ? C.P : C.Q;
        for (const json& v : doc[key]) {
            if (!v.is_array() || v.size() != 2) throw SchemaError("coefficient must be a [u, v] pair");
            target.emplace_back(to_mpz(v[0]), to_mpz(v[1]));
        }
    }
    while (!C.P.empty() && C.P.back().first == 0 && C.P.back().second == 0) C.P.pop_back();
    while (!C.Q.empty() && C.Q.back().first == 0 && C.Q.back().second == 0) C.Q.pop_back();
    if (C.P.size() > 7) throw SchemaError("deg P must be at most 6");
    if (C.Q.size() > 4) throw SchemaError("deg Q must be at most 3");
    const auto sextic = curve_sextic(C);
    const int d = k_poly_deg(sextic);
    if (d < 5) throw SchemaError("the sextic Q^2 + 4P must have degree 5 or 6");
    if (k_is_zero(k_poly_disc(KRing(K), sextic))) throw SchemaError("the sextic Q^2 + 4P has a repeated root");
    return C;
}

ReducedCurve reduce_curve(const CurveK& C, const quad::PrimeOfK& fp, int m) {
    if (fp.kind == quad::SplitKind::Ramified)
        throw RamifiedPrime("reduction at the ramified prime " + fp.tag + " is not defined here");
    const int base_deg = (fp.kind == quad::SplitKind::Inert) ? 2 : 1;
    auto F = FqField::get(fp.p, base_deg * m);
    FqElem wbar;
    if (fp.kind == quad::SplitKind::Split) {
        wbar = F->from_int(*fp.w_image);
    } else {
        quad::ImagQuadField K(C.D);
        auto roots = core::fq_roots(*F, K.w_minpoly());
        if (roots.empty()) throw Error("inert prime but w_minpoly has no root in the quadratic extension");
        wbar = roots.front(); // lexicographically first
    }
    auto map_coeffs = [&](const std::vector<std::pair<mpz_class, mpz_class>>& src) {
        FqPoly out;
        for (const auto& [u, v] : src) {
            mpz_class ur = ((u % fp.p) + fp.p) % fp.p;
            mpz_class vr = ((v % fp.p) + fp.p) % fp.p;
            out.push_back(F->add(F->from_int(ur.get_si()), F->mul(F->from_int(vr.get_si()), wbar)));
        }
        return fqp_trim(*F, out);
    };
    return ReducedCurve{F, map_coeffs(C.P), map_coeffs(C.Q)};
}

ReducedCurve reduce_curve(const CurveQ& C, long p, int m) {
    if (!core::is_prime(p)) throw Error("reduce_curve: p must be prime");
    auto F = FqField::get(p, m);
    FqPoly P;
    for (int i = 0; i <= C.F.degree(); ++i) {
        mpz_class c = ((C.F.coeff(i) % p) + p) % p;
        P.push_back(F->from_int(c.get_si()));
    }
    return ReducedCurve{F, fqp_trim(*F, P), {}};
}

bool is_smooth(const ReducedCurve& C) {
    const FqField& F = *C.F;
    if (F.p() != 2) {
        // Sextic S = Q^2 + 4P squarefree of degree >= 5.
        FqPoly S = fqp_add(F, fqp_mul(F, C.Q, C.Q), fqp_scale(F, F.from_int(4), C.P));
        if (fqp_deg(S) < 5) return false;
        FqPoly g = fqp_gcd(F, S, fqp_deriv(F, S));
        return fqp_deg(g) == 0;
    }
    // Characteristic 2: a point is singular iff Q = 0 and Q'^2 P + P'^2 = 0.
    if (C.Q.empty()) return false; // y^2 = P is inseparable
    FqPoly Qd = fqp_deriv(F, C.Q);
    FqPoly Pd = fqp_deriv(F, C.P);
    FqPoly cond = fqp_add(F, fqp_mul(F, fqp_mul(F, Qd, Qd), C.P), fqp_mul(F, Pd, Pd));
    FqPoly g = fqp_gcd(F, C.Q, cond);
    if (fqp_deg(g) > 0) return false;
    if (g.empty()) return false; // Q and the condition both identically zero
    // Chart at infinity: x = 1/x', y = y'/x'^3 gives y'^2 + Q*(x')y' = P*(x')
    // with Q* = x'^3 Q(1/x'), P* = x'^6 P(1/x'); test the point(s) at x' = 0.
    FqPoly Qs = fqp_reverse(F, C.Q, 3);
    FqPoly Ps = fqp_reverse(F, C.P, 6);
    FqElem q0 = fqp_coeff(F, Qs, 0);
    if (!F.is_zero(q0)) return true;
    FqElem qd0 = fqp_coeff(F, Qs, 1);
    FqElem pd0 = fqp_coeff(F, Ps, 1);
    FqElem p0 = fqp_coeff(F, Ps, 0);
    FqElem sing = F.add(F.mul(F.mul(qd0, qd0), p0), F.mul(pd0, pd0));
    return !F.is_zero(sing);
}

long count_points(const ReducedCurve& C) {
    const FqField& F = *C.F;
    long total = 0;
    for (long i = 0; i < F.q(); ++i) {
        FqElem x = F.elem_at(i);
        FqElem qx = fqp_eval(F, C.Q, x);
        FqElem px = fqp_eval(F, C.P, x);
        total += static_cast<long>(core::solve_quadratic(F, qx, px).size());
    }
    FqElem q3 = fqp_coeff(F, C.Q, 3);
    FqElem p6 = fqp_coeff(F, C.P, 6);
    total += static_cast<long>(core::solve_quadratic(F, q3, p6).size());
    return total;
}

namespace {

// Exact sign of A + B*sqrt(q) for integers A, B and a positive integer q.
int sign_plus_sqrt(const mpz_class& A, const mpz_class& B, long q) {
    const int sa = sgn(A), sb = sgn(B);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Mixed signs: compare A^2 with B^2 q; the sign follows the larger side.
    const mpz_class lhs = A * A, rhs = B * B * q;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

} // namespace

LPoly lpoly_from_counts(long n1, long n2, long q) {
    const mpz_class c1 = mpz_class(n1) - q - 1;
    const mpz_class t = c1 * c1 - (mpz_class(q) * q + 1 - n2);
    if (!mpz_divisible_ui_p(t.get_mpz_t(), 2))
        throw InconsistentCounts("second trace makes c2 non-integral");
    const mpz_class c2 = t / 2;
    const mpz_class c3 = q * c1;
    const mpz_class c4 = mpz_class(q) * q;

    // Reciprocal roots must lie on |x| = sqrt(q): substituting s = y + q/y in
    // the monic reversal reduces this to T(s) = s^2 + c1 s + (c2 - 2q) having
    // both roots in [-2 sqrt(q), 2 sqrt(q)].
    const mpz_class disc = c1 * c1 - 4 * (c2 - 2 * q);
    bool ok = disc >= 0 && c1 * c1 <= 16 * q;
    if (ok) {
        const mpz_class A = 2 * q + c2;
        // T(2 sqrt q) = A + 2 c1 sqrt q, T(-2 sqrt q) = A - 2 c1 sqrt q.
        if (sign_plus_sqrt(A, 2 * c1, q) < 0 || sign_plus_sqrt(A, -2 * c1, q) < 0) ok = false;
    }
    if (!ok) throw InconsistentCounts("counts violate the Weil bound");
    return LPoly{q, core::IntPoly({mpz_class(1), c1, c2, c3, c4})};
}

LPoly curve_lpoly(const CurveK& C, const quad::PrimeOfK& fp) {
    ReducedCurve R1 = reduce_curve(C, fp, 1);
    if (!is_smooth(R1)) throw SingularModel("bad reduction at " + fp.tag);
    ReducedCurve R2 = reduce_curve(C, fp, 2);
    const long n1 = count_points(R1);
    const long n2 = count_points(R2);
    return lpoly_from_counts(n1, n2, R1.F->q());
}

core::IntPoly poly_reverse(const core::IntPoly& f, int deg) {
    if (f.degree() > deg) throw Error("poly_reverse: degree exceeds the stated bound");
    std::vector<mpz_class> c(static_cast<size_t>(deg) + 1, mpz_class(0));
    for (int i = 0; i <= f.degree(); ++i) c[static_cast<size_t>(deg - i)] = f.coeff(i);
    return core::IntPoly(std::move(c));
}

} // namespace paralift::curves
