#include <doctest.h>

#include <array>
#include <vector>

#include "paralift/curves.hpp"
#include "paralift/data.hpp"
#include "paralift/gsp4.hpp"
#include "paralift/lift.hpp"

using namespace paralift;
using lift::GSp4Matrix;
using lift::Mat2;

namespace {

std::vector<mpq_class> q(std::vector<long> v) {
    return {v.begin(), v.end()};
}

} // namespace

TEST_CASE("paramodular level") {
    CHECK(lift::paramodular_level(-223, 1) == 49729);
    CHECK(lift::paramodular_level(-4, 1) == 16);
    CHECK(lift::paramodular_level(-7, 3) == 147);
    CHECK(lift::paramodular_level(-8, 5) == 320);
    CHECK_THROWS_AS(lift::paramodular_level(-5, 1), quad::BadDiscriminant);
    CHECK_THROWS_AS(lift::paramodular_level(5, 1), quad::BadDiscriminant);
    CHECK_THROWS_AS(lift::paramodular_level(0, 1), quad::BadDiscriminant);
}

TEST_CASE("spinor factors at split primes reverse the table quartics") {
    auto f = data::bundled_newform();
    for (long p : {2L, 7L, 17L, 19L, 29L, 31L}) {
        CAPTURE(p);
        auto S = lift::spinor_factor(f, p);
        CHECK(S.valuation_case == 0);
        REQUIRE(S.poly.size() == 5);
        auto quartic = bianchi::q_poly(f, quad::splitting(f.field, p).primes[0]);
        for (int i = 0; i <= 4; ++i)
            CHECK(S.poly[static_cast<size_t>(i)] == mpq_class(quartic.coeff(4 - i)));
    }
    auto S2 = lift::spinor_factor(f, 2);
    CHECK(S2.poly == q({1, 2, 3, 4, 4}));
}

TEST_CASE("spinor factors at inert primes are even squares in disguise") {
    auto f = data::bundled_newform();
    for (long p : {3L, 5L}) {
        CAPTURE(p);
        auto S = lift::spinor_factor(f, p);
        REQUIRE(S.poly.size() == 5);
        CHECK(S.poly[1] == 0);
        CHECK(S.poly[3] == 0);
        // The degree-2 truncation squared reproduces the reversed quartic of
        // the eigenvalue at norm p^2: (1 - a x + p^2 x^2)^2 has the same
        // coefficients as x^4 Q(1/x).
        auto fp = quad::splitting(f.field, p).primes[0];
        auto a = f.eigenvalue(fp);
        REQUIRE(a.b == 0);
        mpq_class c1 = -mpq_class(a.a), c2 = mpq_class(p) * p;
        std::vector<mpq_class> sq = {1, 2 * c1, c1 * c1 + 2 * c2, 2 * c1 * c2, c2 * c2};
        auto quartic = bianchi::q_poly(f, fp);
        for (int i = 0; i <= 4; ++i)
            CHECK(sq[static_cast<size_t>(i)] == mpq_class(quartic.coeff(4 - i)));
        CHECK(S.poly[2] == -mpq_class(a.a));
        CHECK(S.poly[4] == c2);
    }
    CHECK(lift::spinor_factor(f, 3).poly == q({1, 0, 3, 0, 9}));
    CHECK(lift::spinor_factor(f, 5).poly == q({1, 0, 0, 0, 25}));
}

TEST_CASE("spinor factor error paths") {
    auto f = data::bundled_newform();
    CHECK_THROWS_AS(lift::spinor_factor(f, 223), lift::RamifiedUnsupported);
    CHECK_THROWS_AS(lift::spinor_factor(f, 11), bianchi::UnknownPrime);
}

TEST_CASE("Arakawa eigenvalues at weight 2") {
    auto f = data::bundled_newform();
    auto S2 = lift::spinor_factor(f, 2);
    auto E2 = lift::arakawa_eigen(S2, 2);
    CHECK(E2.lambda == -2);
    CHECK(E2.mu == mpq_class(1, 4));
    CHECK(!E2.epsilon.has_value());

    auto E3 = lift::arakawa_eigen(lift::spinor_factor(f, 3), 2);
    CHECK(E3.lambda == 0);
    CHECK(E3.mu == mpq_class(-1, 9));

    auto E5 = lift::arakawa_eigen(lift::spinor_factor(f, 5), 2);
    CHECK(E5.lambda == 0);
    CHECK(E5.mu == mpq_class(-26, 25));
}

TEST_CASE("Arakawa round-trip is the identity") {
    auto f = data::bundled_newform();
    for (long p : {2L, 3L, 5L, 7L, 17L, 19L, 29L, 31L}) {
        CAPTURE(p);
        auto S = lift::spinor_factor(f, p);
        auto E = lift::arakawa_eigen(S, 2);
        auto back = lift::build_factor_val0(E.lambda, E.mu, p, 2);
        CHECK(back.poly == S.poly);
        CHECK(back.valuation_case == 0);
    }
    // And in the other direction from arbitrary (lambda, mu), also at k = 4.
    for (int k : {2, 4}) {
        mpq_class lambda(7, 2), mu(-5, 3);
        auto S = lift::build_factor_val0(lambda, mu, 3, k);
        auto E = lift::arakawa_eigen(S, k);
        CHECK(E.lambda == lambda);
        CHECK(E.mu == mu);
    }
}

TEST_CASE("Arakawa extraction validates the symmetric shape") {
    auto bad = lift::SpinorFactor{2, q({1, 2, 3, 5, 4}), 0}; // c3 != p c1
    CHECK_THROWS_AS(lift::arakawa_eigen(bad, 2), lift::SymmetryViolation);
    auto bad4 = lift::SpinorFactor{2, q({1, 2, 3, 4, 5}), 0}; // c4 != p^2
    CHECK_THROWS_AS(lift::arakawa_eigen(bad4, 2), lift::SymmetryViolation);
    auto bad0 = lift::SpinorFactor{2, q({2, 2, 3, 4, 4}), 0}; // c0 != 1
    CHECK_THROWS_AS(lift::arakawa_eigen(bad0, 2), lift::SymmetryViolation);
    auto good = lift::SpinorFactor{2, q({1, 2, 3, 4, 4}), 0};
    CHECK_THROWS_AS(lift::arakawa_eigen(good, 3), lift::BadArgument); // odd weight
    auto v1 = lift::SpinorFactor{2, q({1, 2, 3, 4}), 1};
    CHECK_THROWS_AS(lift::arakawa_eigen(v1, 2), lift::BadArgument); // wrong shape
}

TEST_CASE("bad-prime factor shapes") {
    // Valuation 1 at p = 2, k = 2: the normalization puts a half-integral
    // linear coefficient in front.
    auto S = lift::build_factor_val_ge1(0, 0, 1, 2, 2, 1);
    REQUIRE(S.poly.size() == 4);
    CHECK(S.poly[0] == 1);
    CHECK(S.poly[1] == mpq_class(-1, 2));
    CHECK(S.poly[2] == 2);
    CHECK(S.poly[3] == 2);
    CHECK(S.valuation_case == 1);

    auto T = lift::build_factor_val_ge1(1, 0, -1, 3, 2, 2);
    REQUIRE(T.poly.size() == 3);
    CHECK(T.poly[0] == 1);
    CHECK(T.poly[1] == -1);
    CHECK(T.poly[2] == 3);
    CHECK(T.valuation_case == 2);

    CHECK_THROWS_AS(lift::build_factor_val_ge1(0, 0, 0, 2, 2, 1), lift::BadArgument);
    CHECK_THROWS_AS(lift::build_factor_val_ge1(0, 0, 2, 2, 2, 1), lift::BadArgument);
    CHECK_THROWS_AS(lift::build_factor_val_ge1(0, 0, 1, 2, 3, 1), lift::BadArgument);
    CHECK_THROWS_AS(lift::build_factor_val_ge1(0, 0, 1, 2, 2, 3), lift::BadArgument);
    CHECK_THROWS_AS(lift::build_factor_val_ge1(0, 0, 1, 2, 2, 0), lift::BadArgument);
}

TEST_CASE("functional equation metadata") {
    auto meta = lift::func_eq_meta(data::bundled_newform());
    CHECK(meta.gamma_exponent == 2);
    CHECK(meta.conductor == 49729);
    CHECK(meta.epsilon_unknown_at == std::vector<long>{223});
}

namespace {

// Independent 4x4 exact multiply for cross-checking the similitude values.
GSp4Matrix mul_oracle(const GSp4Matrix& A, const GSp4Matrix& B) {
    GSp4Matrix C;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            mpq_class s = 0;
            for (int k = 0; k < 4; ++k)
                s += A.m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                     B.m[static_cast<size_t>(k)][static_cast<size_t>(j)];
            C.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
        }
    return C;
}

GSp4Matrix transpose(const GSp4Matrix& A) {
    GSp4Matrix T;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            T.m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                A.m[static_cast<size_t>(j)][static_cast<size_t>(i)];
    return T;
}

// Check M^t J M == nu J entrywise with test-local arithmetic.
bool similitude_oracle(const GSp4Matrix& M, const mpq_class& nu) {
    auto S = mul_oracle(mul_oracle(transpose(M), lift::gsp4_j()), M);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (S.m[static_cast<size_t>(i)][static_cast<size_t>(j)] !=
                nu * lift::gsp4_j().m[static_cast<size_t>(i)][static_cast<size_t>(j)])
                return false;
    return true;
}

} // namespace

TEST_CASE("similitude factors of the parameter matrices") {
    CHECK(lift::gsp4_similitude(lift::gsp4_identity()) == 1);
    CHECK(similitude_oracle(lift::gsp4_identity(), 1));

    CHECK(lift::gsp4_similitude(lift::gsp4_j()) == 1);
    CHECK(similitude_oracle(lift::gsp4_j(), 1));

    for (int k : {2, 4, 6}) {
        auto M = lift::lparam_arch_j(k);
        CHECK(lift::gsp4_similitude(M) == 1);
        CHECK(similitude_oracle(M, 1));
    }
    for (int k : {3, 5}) {
        auto M = lift::lparam_arch_j(k);
        CHECK(lift::gsp4_similitude(M) == -1);
        CHECK(similitude_oracle(M, -1));
    }

    // phi embeds g0 as a similitude exactly when det g0 = 1, with nu = 1;
    // the involutions with g0^2 = 1 in its domain are +-identity.
    for (auto [a0, b0, c0, d0] :
         std::vector<std::array<long, 4>>{{1, 0, 0, 1}, {-1, 0, 0, -1}, {2, 3, 1, 2},
                                          {1, 5, 0, 1}, {0, -1, 1, 0}}) {
        CAPTURE(a0);
        auto P = lift::lparam_phi_g0(a0, b0, c0, d0);
        CHECK(lift::gsp4_similitude(P) == 1);
        CHECK(similitude_oracle(P, 1));
    }
    // Determinant -1 falls outside the embedding even when g0^2 = 1.
    CHECK_THROWS_AS(lift::gsp4_similitude(lift::lparam_phi_g0(0, 1, 1, 0)),
                    lift::NotSimilitude);
    CHECK_THROWS_AS(lift::gsp4_similitude(lift::lparam_phi_g0(1, 0, 0, -1)),
                    lift::NotSimilitude);
}

TEST_CASE("split-prime interleaving") {
    Mat2 I{{{mpq_class(1), mpq_class(0)}, {mpq_class(0), mpq_class(1)}}};
    CHECK(lift::lparam_split_interleave(I, I) == lift::gsp4_identity());

    Mat2 M{{{mpq_class(1), mpq_class(2)}, {mpq_class(3), mpq_class(4)}}};
    Mat2 adjM{{{mpq_class(4), mpq_class(-2)}, {mpq_class(-3), mpq_class(1)}}};
    auto G = lift::lparam_split_interleave(M, adjM);
    CHECK(lift::gsp4_similitude(G) == -2); // det M
    CHECK(similitude_oracle(G, -2));

    // Equal determinants suffice.
    Mat2 A{{{mpq_class(2), mpq_class(0)}, {mpq_class(0), mpq_class(3)}}};
    Mat2 B{{{mpq_class(6), mpq_class(0)}, {mpq_class(0), mpq_class(1)}}};
    auto H = lift::lparam_split_interleave(A, B);
    CHECK(lift::gsp4_similitude(H) == 6);
    CHECK(similitude_oracle(H, 6));

    // Unequal determinants are not similitudes.
    Mat2 C{{{mpq_class(2), mpq_class(0)}, {mpq_class(0), mpq_class(1)}}};
    CHECK_THROWS_AS(lift::gsp4_similitude(lift::lparam_split_interleave(I, C)),
                    lift::NotSimilitude);
    // Singular blocks give nu = 0.
    Mat2 Z{};
    CHECK_THROWS_AS(lift::gsp4_similitude(lift::lparam_split_interleave(Z, Z)),
                    lift::NotSimilitude);
}

TEST_CASE("non-similitudes are rejected") {
    auto M = lift::gsp4_identity();
    M.m[0][0] = 2; // breaks the pairing between coordinates 0 and 2
    CHECK_THROWS_AS(lift::gsp4_similitude(M), lift::NotSimilitude);
    GSp4Matrix zero{};
    CHECK_THROWS_AS(lift::gsp4_similitude(zero), lift::NotSimilitude);
}

TEST_CASE("gsp4 products multiply similitude factors") {
    auto A = lift::lparam_arch_j(3);
    auto B = lift::lparam_phi_g0(2, 3, 1, 2);
    auto AB = lift::gsp4_mul(A, B);
    CHECK(AB == mul_oracle(A, B));
    CHECK(lift::gsp4_similitude(AB) ==
          lift::gsp4_similitude(A) * lift::gsp4_similitude(B));
}
