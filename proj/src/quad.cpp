#include "paralift/quad.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "paralift/numthy.hpp"

namespace paralift::quad {

ImagQuadField::ImagQuadField(long disc) : D(disc) {
    if (D >= 0) throw BadDiscriminant("discriminant must be negative");
    if (!core::is_fundamental_disc(D)) throw BadDiscriminant("discriminant is not fundamental");
}

core::IntPoly ImagQuadField::w_minpoly() const {
    if (w_trace() == 1) return core::IntPoly({mpz_class((1 - D) / 4), mpz_class(-1), mpz_class(1)});
    return core::IntPoly({mpz_class(-D / 4), mpz_class(0), mpz_class(1)});
}

std::string make_tag(long p, SplitKind kind, std::optional<long> w_image) {
    if (kind != SplitKind::Split) return "[" + std::to_string(p) + "]";
    if (!w_image) throw NotAPrimeIdeal("split prime needs a w_image");
    std::ostringstream os;
    if (p == 2) {
        // Generator w - w_image with the shift lifted into [1, 2]:
        // w_image 1 -> w+1, w_image 0 -> w+2.
        os << "[2, w+" << (*w_image == 1 ? 1 : 2) << "]";
        return os.str();
    }
    long a = ((-2 * *w_image) % p + p) % p;
    os << "[" << p << ", 2w";
    if (a != 0) os << "+" << a;
    os << "]";
    return os.str();
}

SplittingResult splitting(const ImagQuadField& K, long p) {
    if (!core::is_prime(p)) throw Error("splitting: p must be prime");
    const core::IntPoly m = K.w_minpoly();
    std::vector<long> roots;
    for (long x = 0; x < p; ++x) {
        mpz_class v = m.eval(x) % p;
        if (v == 0) roots.push_back(x);
    }
    SplittingResult res;
    const int kr = core::kronecker(K.D, p);
    if (kr == 0) {
        res.kind = SplitKind::Ramified;
        PrimeOfK fp;
        fp.p = p;
        fp.kind = SplitKind::Ramified;
        fp.w_image = roots.at(0); // the double root; residue degree 1
        fp.w_trace = K.w_trace();
        fp.norm = p;
        fp.tag = make_tag(p, fp.kind, fp.w_image);
        res.primes.push_back(fp);
        return res;
    }
    if (kr == -1) {
        res.kind = SplitKind::Inert;
        PrimeOfK fp;
        fp.p = p;
        fp.kind = SplitKind::Inert;
        fp.w_trace = K.w_trace();
        fp.norm = mpz_class(p) * p;
        fp.tag = make_tag(p, fp.kind, std::nullopt);
        res.primes.push_back(fp);
        return res;
    }
    res.kind = SplitKind::Split;
    std::sort(roots.begin(), roots.end());
    for (long r : roots) {
        PrimeOfK fp;
        fp.p = p;
        fp.kind = SplitKind::Split;
        fp.w_image = r;
        fp.w_trace = K.w_trace();
        fp.norm = p;
        fp.tag = make_tag(p, fp.kind, r);
        res.primes.push_back(fp);
    }
    return res;
}

PrimeOfK parse_ideal_tag(const ImagQuadField& K, const std::string& tag) {
    std::string s;
    for (char ch : tag)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.size() < 3 || s.front() != '[' || s.back() != ']') throw MalformedTag("malformed tag: " + tag);
    s = s.substr(1, s.size() - 2);
    const auto comma = s.find(',');
    const std::string p_part = s.substr(0, comma == std::string::npos ? s.size() : comma);
    if (p_part.empty() || !std::all_of(p_part.begin(), p_part.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
        throw MalformedTag("malformed prime in tag: " + tag);
    const long p = std::stol(p_part);
    if (!core::is_prime(p)) throw NotAPrimeIdeal("tag names a composite: " + tag);
    SplittingResult sp = splitting(K, p);

    if (comma == std::string::npos) {
        if (sp.kind == SplitKind::Split)
            throw NotAPrimeIdeal("(" + std::to_string(p) + ") is not prime: p splits");
        return sp.primes[0];
    }

    // Generator grammar: "w", "2w", optionally followed by "+a", a >= 0.
    std::string gen = s.substr(comma + 1);
    long c = 1;
    if (gen.rfind("2w", 0) == 0) {
        c = 2;
        gen = gen.substr(2);
    } else if (gen.rfind("w", 0) == 0) {
        gen = gen.substr(1);
    } else {
        throw MalformedTag("generator must be w or 2w with an optional shift: " + tag);
    }
    long a = 0;
    if (!gen.empty()) {
        if (gen[0] != '+' || gen.size() < 2 ||
            !std::all_of(gen.begin() + 1, gen.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            throw MalformedTag("malformed generator shift: " + tag);
        a = std::stol(gen.substr(1));
    }
    if (c % p == 0) throw NotAPrimeIdeal("generator coefficient vanishes mod p: " + tag);
    long cinv = 0;
    for (long x = 1; x < p; ++x)
        if ((c % p) * x % p == 1) {
            cinv = x;
            break;
        }
    // c*w + a lies in the prime, so w = -a/c mod p.
    const long w_image = (((-a % p) + p) % p) * cinv % p;
    for (const PrimeOfK& fp : sp.primes)
        if (fp.w_image == w_image) return fp;
    throw NotAPrimeIdeal("generator does not cut out a prime above " + std::to_string(p) + ": " + tag);
}

PrimeOfK conj_prime(const PrimeOfK& fp) {
    if (fp.kind != SplitKind::Split) throw NotSplit("conj_prime needs a split prime: " + fp.tag);
    PrimeOfK other = fp;
    other.w_image = ((fp.w_trace - *fp.w_image) % fp.p + fp.p) % fp.p;
    other.tag = make_tag(other.p, other.kind, other.w_image);
    return other;
}

} // namespace paralift::quad
