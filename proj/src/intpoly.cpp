#include "paralift/intpoly.hpp"

#include "paralift/error.hpp"

#include <sstream>

namespace paralift::core {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) c_.emplace_back(v);
    trim();
}

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::coeff(int i) const {
    static const mpz_class zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<size_t>(i)];
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<mpz_class> r(std::max(c_.size(), o.c_.size()), mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<mpz_class> r(c_);
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<mpz_class> r(c_.size() + o.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return IntPoly(std::move(r));
}

mpz_class IntPoly::eval(const mpz_class& x) const {
    mpz_class acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::string IntPoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& a = coeff(i);
        if (a == 0) continue;
        mpz_class mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (!unit) os << mag.get_str();
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

IntPoly int_poly_scale(const mpz_class& s, const IntPoly& f) {
    std::vector<mpz_class> r(f.coeffs());
    for (auto& v : r) v *= s;
    return IntPoly(std::move(r));
}

namespace {

// Bareiss fraction-free determinant; all intermediate divisions are exact.
mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m) {
    const size_t n = m.size();
    if (n == 0) return 1;
    mpz_class prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t piv = k + 1;
            while (piv < n && m[piv][k] == 0) ++piv;
            if (piv == n) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_class q;
                mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = q;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : mpz_class(-m[n - 1][n - 1]);
}

} // namespace

mpz_class resultant(const IntPoly& f, const IntPoly& g) {
    const int m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) return 0;
    if (m == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), f.coeff(0).get_mpz_t(), static_cast<unsigned long>(n));
        return r;
    }
    if (n == 0) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), g.coeff(0).get_mpz_t(), static_cast<unsigned long>(m));
        return r;
    }
    // Sylvester matrix: n shifted copies of f then m shifted copies of g.
    const size_t dim = static_cast<size_t>(m + n);
    std::vector<std::vector<mpz_class>> s(dim, std::vector<mpz_class>(dim, mpz_class(0)));
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) s[row][row + j] = f.coeff(m - j);
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) s[n + row][row + j] = g.coeff(n - j);
    return det_bareiss(std::move(s));
}

mpz_class poly_disc(const IntPoly& f) {
    const int n = f.degree();
    if (n < 1) throw Error("poly_disc: degree must be at least 1");
    if (n == 1) return 1;
    mpz_class res = resultant(f, f.derivative());
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), res.get_mpz_t(), f.leading().get_mpz_t());
    const long swaps = static_cast<long>(n) * (n - 1) / 2;
    return (swaps % 2 == 0) ? q : mpz_class(-q);
}

} // namespace paralift::core
