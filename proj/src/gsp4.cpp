#include "paralift/gsp4.hpp"

namespace paralift::lift {

GSp4Matrix gsp4_identity() {
    GSp4Matrix I;
    for (int i = 0; i < 4; ++i)
        I.m[i][i] = 1;
    return I;
}

GSp4Matrix gsp4_j() {
    GSp4Matrix J;
    J.m[0][2] = 1;
    J.m[1][3] = 1;
    J.m[2][0] = -1;
    J.m[3][1] = -1;
    return J;
}

GSp4Matrix gsp4_mul(const GSp4Matrix& A, const GSp4Matrix& B) {
    GSp4Matrix C;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            mpq_class s = 0;
            for (int k = 0; k < 4; ++k)
                s += A.m[i][k] * B.m[k][j];
            C.m[i][j] = s;
        }
    return C;
}

mpq_class gsp4_similitude(const GSp4Matrix& M) {
    GSp4Matrix Mt;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            Mt.m[i][j] = M.m[j][i];
    const GSp4Matrix S = gsp4_mul(gsp4_mul(Mt, gsp4_j()), M);
    const GSp4Matrix J = gsp4_j();
    const mpq_class nu = S.m[0][2];
    if (nu == 0)
        throw NotSimilitude("M^t J M is not a nonzero multiple of J");
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            if (S.m[i][j] != nu * J.m[i][j])
                throw NotSimilitude("M^t J M is not a multiple of J");
    return nu;
}

GSp4Matrix lparam_arch_j(int k) {
    const int s = (k % 2 == 0) ? -1 : 1; // (-1)^(k-1)
    GSp4Matrix A;
    A.m[0][3] = 1;
    A.m[1][2] = 1;
    A.m[2][1] = s;
    A.m[3][0] = s;
    return A;
}

GSp4Matrix lparam_phi_g0(const mpq_class& a0, const mpq_class& b0,
                         const mpq_class& c0, const mpq_class& d0) {
    GSp4Matrix G;
    G.m[0][1] = 1;
    G.m[1][0] = a0;
    G.m[1][2] = b0;
    G.m[2][3] = 1;
    G.m[3][0] = c0;
    G.m[3][2] = d0;
    return G;
}

GSp4Matrix lparam_split_interleave(const Mat2& M1, const Mat2& M2) {
    GSp4Matrix G;
    const int idx1[2] = {0, 2}, idx2[2] = {1, 3};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            G.m[idx1[i]][idx1[j]] = M1[i][j];
            G.m[idx2[i]][idx2[j]] = M2[i][j];
        }
    return G;
}

} // namespace paralift::lift
