#include "paralift/humbert.hpp"

namespace paralift::curves {

HumbertPoint humbert_point(const mpq_class& r, const mpq_class& s) {
    if (r == 0 || s == 0)
        throw DegenerateParameters("the parametrization needs r != 0 and s != 0");

    const mpq_class A1 = 2 * r * s * s;
    const mpq_class A = -(9 * r * s + 4 * r * r + 4 * r + 1) / 3;
    const mpq_class B1 = r * s * s * (3 * s + 8 * r - 2) / 3;
    const mpq_class B =
        -(54 * r * r * s + 81 * r * s - 16 * r * r * r - 24 * r * r - 12 * r - 2) / 27;
    const mpq_class B2 = r * r;

    HumbertPoint out;
    out.r = r;
    out.s = s;
    out.z_squared = 2 * (16 * r * s * s + 32 * r * r * s - 40 * r * s - s +
                         16 * r * r * r + 24 * r * r + 12 * r + 2);
    out.ic.I2 = -24 * B1 / A1;
    out.ic.I4 = -12 * A;
    out.ic.I6 = (96 * A * B1 - 36 * A1 * B) / A1;
    out.ic.I10 = -4 * A1 * B2;
    return out;
}

} // namespace paralift::curves
