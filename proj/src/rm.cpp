#include "paralift/rm.hpp"

#include <sstream>

namespace paralift::quad {

std::string RmElement::str() const {
    if (b == 0) return a.get_str();
    std::ostringstream os;
    if (b == -1)
        os << "-";
    else if (b != 1)
        os << b.get_str();
    os << "e";
    if (a > 0)
        os << "+" << a.get_str();
    else if (a < 0)
        os << a.get_str();
    return os.str();
}

int rm_reduce_lambda2(const RmElement& x) {
    return static_cast<int>(mpz_class(((x.a % 2) + 2) % 2).get_si());
}

} // namespace paralift::quad
