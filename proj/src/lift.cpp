#include "paralift/lift.hpp"

#include "paralift/numthy.hpp"

namespace paralift::lift {

namespace {

// p^e as an exact rational, e possibly negative.
mpq_class qpow(long p, long e) {
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? mpq_class(1) / mpq_class(t) : mpq_class(t);
}

} // namespace

mpz_class paramodular_level(long D, const mpz_class& level_norm) {
    if (D >= 0 || !core::is_fundamental_disc(D))
        throw quad::BadDiscriminant("level needs a fundamental negative discriminant");
    if (level_norm < 1)
        throw BadArgument("level norm must be positive");
    return mpz_class(D) * D * level_norm;
}

SpinorFactor spinor_factor(const bianchi::BianchiNewform& f, long p) {
    const auto split = quad::splitting(f.field, p);
    if (split.kind == quad::SplitKind::Ramified)
        throw RamifiedUnsupported(
            "local factor at " + std::to_string(p) +
            " has the degree <= 2 bad-prime shape with coefficients the "
            "eigenvalue table does not determine");

    SpinorFactor S;
    S.p = p;
    S.valuation_case = 0;
    const mpz_class pz(p);
    if (split.kind == quad::SplitKind::Split) {
        const quad::RmElement& a = f.eigenvalue(split.primes.at(0));
        // (1 - a x + p x^2)(1 - tau(a) x + p x^2): the tau-symmetric
        // combinations a + tau(a) = 2*alpha and a*tau(a) = norm(a) are
        // rational integers.
        const mpz_class tr = 2 * a.a;
        const mpz_class nm = a.norm();
        S.poly = {mpq_class(1), mpq_class(-tr), mpq_class(2 * pz + nm),
                  mpq_class(-pz * tr), mpq_class(pz * pz)};
    } else {
        const quad::RmElement& a = f.eigenvalue(split.primes.at(0));
        if (a.b != 0)
            throw NonRationalInert("inert eigenvalue at " + std::to_string(p) +
                                   " is not tau-fixed");
        S.poly = {mpq_class(1), mpq_class(0), mpq_class(-a.a), mpq_class(0),
                  mpq_class(pz * pz)};
    }
    return S;
}

ArakawaEigen arakawa_eigen(const SpinorFactor& S, int k) {
    if (k < 2 || k % 2 != 0)
        throw BadArgument("weight must be a positive even integer");
    if (S.valuation_case != 0)
        throw BadArgument("eigenvalue extraction needs the valuation-0 shape");
    auto c = [&](size_t i) {
        return i < S.poly.size() ? S.poly[i] : mpq_class(0);
    };
    const mpq_class pk1 = qpow(S.p, k - 1);
    const mpq_class pk3 = qpow(S.p, k - 3);
    if (c(0) != 1)
        throw SymmetryViolation("constant term must be 1");
    if (c(3) != pk1 * c(1))
        throw SymmetryViolation("cubic term breaks the functional-equation symmetry");
    if (c(4) != qpow(S.p, 2 * k - 2))
        throw SymmetryViolation("quartic term must be p^(2k-2)");

    ArakawaEigen E;
    E.p = S.p;
    E.lambda = -c(1);
    E.mu = (c(2) - pk1 - pk3) / S.p;
    return E;
}

SpinorFactor build_factor_val0(const mpq_class& lambda, const mpq_class& mu,
                               long p, int k) {
    if (k < 2 || k % 2 != 0)
        throw BadArgument("weight must be a positive even integer");
    SpinorFactor S;
    S.p = p;
    S.valuation_case = 0;
    const mpq_class pk1 = qpow(p, k - 1);
    S.poly = {mpq_class(1), -lambda, p * mu + pk1 + qpow(p, k - 3),
              -pk1 * lambda, qpow(p, 2 * k - 2)};
    return S;
}

SpinorFactor build_factor_val_ge1(const mpq_class& lambda, const mpq_class& mu,
                                  int epsilon, long p, int k,
                                  int valuation_case) {
    if (k < 2 || k % 2 != 0)
        throw BadArgument("weight must be a positive even integer");
    if (epsilon != 1 && epsilon != -1)
        throw BadArgument("epsilon must be +1 or -1");
    if (valuation_case != 1 && valuation_case != 2)
        throw BadArgument("valuation case must be 1 or >= 2");
    SpinorFactor S;
    S.p = p;
    S.valuation_case = valuation_case;
    const mpq_class c2 = p * mu + qpow(p, k - 1);
    if (valuation_case == 1)
        S.poly = {mpq_class(1), -(lambda + qpow(p, k / 2 - 2) * epsilon), c2,
                  epsilon * qpow(p, 3 * k / 2 - 2)};
    else
        S.poly = {mpq_class(1), -lambda, c2};
    return S;
}

FuncEqMeta func_eq_meta(const bianchi::BianchiNewform& f) {
    FuncEqMeta M;
    M.conductor = paramodular_level(f.field.D, f.level_norm);
    M.epsilon_unknown_at = core::prime_support(mpz_class(-f.field.D));
    return M;
}

} // namespace paralift::lift
