#include "paralift/fs.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include "paralift/fppoly.hpp"
#include "paralift/igusa.hpp"
#include "paralift/numthy.hpp"
#include "paralift/rm.hpp"

namespace paralift::fs {

const char* s3_name(S3Class c) {
    switch (c) {
    case S3Class::Identity:
        return "identity";
    case S3Class::Transposition:
        return "transposition";
    case S3Class::ThreeCycle:
        return "three-cycle";
    }
    return "?";
}

int s3_trace(S3Class c) { return c == S3Class::ThreeCycle ? 1 : 0; }

SexticField make_sextic_field(const core::IntPoly& poly) {
    if (poly.degree() != 6)
        throw SchemaError("defining polynomial must have degree 6");
    SexticField N;
    N.poly = poly;
    N.disc = core::poly_disc(poly);
    if (N.disc == 0)
        throw NotIrreducible("polynomial has a repeated root");
    N.support = core::prime_support(N.disc);

    // Irreducibility certificate: reductions of type 2^3 and 3^2. A proper
    // rational factor would reduce to a sub-multiset of both, and the proper
    // subset-sums {2, 4} and {3} are disjoint.
    bool saw23 = false, saw32 = false;
    const core::FactorizationType want23{{{2, 3}}};
    const core::FactorizationType want32{{{3, 2}}};
    for (long p : core::primes_below(500)) {
        if (mpz_divisible_ui_p(N.disc.get_mpz_t(), static_cast<unsigned long>(p)))
            continue;
        const auto t = core::ddf_type(poly, p);
        saw23 = saw23 || t == want23;
        saw32 = saw32 || t == want32;
        if (saw23 && saw32)
            return N;
    }
    throw NotIrreducible("no irreducibility certificate below the scan bound");
}

SexticField load_sextic(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw SchemaError(std::string("bad sextic document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("poly") || !doc["poly"].is_array())
        throw SchemaError("sextic document needs a \"poly\" array");
    std::vector<mpz_class> c;
    for (const auto& v : doc["poly"]) {
        if (!v.is_number_integer())
            throw SchemaError("sextic coefficients must be integers");
        c.emplace_back(static_cast<long>(v.get<long long>()));
    }
    return make_sextic_field(core::IntPoly(std::move(c)));
}

S3Class s3_frobenius(const SexticField& N, long p) {
    if (N.disc != 0 && mpz_divisible_ui_p(N.disc.get_mpz_t(), static_cast<unsigned long>(p)))
        throw curves::RamifiedPrime("prime " + std::to_string(p) +
                                    " divides the sextic discriminant");
    const auto t = core::ddf_type(N.poly, p);
    if (t == core::FactorizationType{{{1, 6}}})
        return S3Class::Identity;
    if (t == core::FactorizationType{{{2, 3}}})
        return S3Class::Transposition;
    if (t == core::FactorizationType{{{3, 2}}})
        return S3Class::ThreeCycle;
    throw UnexpectedType("degree multiset " + t.str() + " at " + std::to_string(p) +
                         " is not a regular S3 type");
}

S3Class s3_class_from_certificate(const core::UnramifiedCertificate& cert) {
    if (!cert.unramified)
        throw curves::RamifiedPrime("prime " + std::to_string(cert.p) +
                                    " ramifies in the sextic field");
    switch (cert.residue_factor_count) {
    case 6:
        return S3Class::Identity;
    case 3:
        return S3Class::Transposition;
    case 2:
        return S3Class::ThreeCycle;
    default:
        throw UnexpectedType("factor count " +
                             std::to_string(cert.residue_factor_count) + " at " +
                             std::to_string(cert.p) + " is not a regular S3 type");
    }
}

namespace {

// Trace parity of the eigenvalue at a prime above p: reduction of the
// Z[sqrt2] coefficient mod lambda_2 = (sqrt2).
int parity_above(const bianchi::BianchiNewform& f, long p) {
    const auto split = quad::splitting(f.field, p);
    return quad::rm_reduce_lambda2(f.eigenvalue(split.primes.at(0)));
}

ParityRow parity_row(const bianchi::BianchiNewform& f, long p, S3Class cls,
                     std::string method) {
    ParityRow row;
    row.p = p;
    row.cls = cls;
    row.parity = parity_above(f, p);
    // Inert Frob_P = (Frob_p)^2, and squaring preserves exactly the
    // 3-cycles, so one rule covers both split and inert p.
    row.pass = (row.parity == 1) == (cls == S3Class::ThreeCycle);
    row.method = std::move(method);
    return row;
}

} // namespace

std::vector<ParityRow> parity_compatibility(const bianchi::BianchiNewform& f,
                                            const SexticField& N,
                                            const std::vector<long>& primes) {
    std::vector<ParityRow> out;
    out.reserve(primes.size());
    for (long p : primes)
        out.push_back(parity_row(f, p, s3_frobenius(N, p), "ddf"));
    std::sort(out.begin(), out.end(),
              [](const ParityRow& a, const ParityRow& b) { return a.p < b.p; });
    return out;
}

SieveResult quad_subfield_sieve(const std::vector<long>& d_list,
                                const std::vector<long>& odd_trace_primes) {
    SieveResult R;
    for (long d : d_list) {
        const mpz_class fund = core::fundamental_disc_of(d);
        long witness = 0;
        for (long p : odd_trace_primes)
            if (core::kronecker(fund, p) == -1 && (witness == 0 || p < witness))
                witness = p;
        if (witness)
            R.eliminated.push_back({d, fund, witness});
        else
            R.survivors.push_back(d);
    }
    std::sort(R.survivors.begin(), R.survivors.end());
    std::sort(R.eliminated.begin(), R.eliminated.end(),
              [](const SieveElimination& a, const SieveElimination& b) {
                  return a.d < b.d;
              });
    return R;
}

std::vector<long> ramification_support(const SexticField& N) { return N.support; }

SurjectivityResult residual_surjectivity(const bianchi::BianchiNewform& f,
                                         unsigned h) {
    SurjectivityResult R;
    bool odd = false;
    for (const auto& e : f.entries)
        odd = odd || quad::rm_reduce_lambda2(e.a) == 1;
    if (!odd)
        R.reasons.push_back("no odd-parity eigenvalue: the residual image has "
                            "no element of order 3");
    if (h % 3 == 0)
        R.reasons.push_back("class number divisible by 3: an order-3-only image "
                            "cannot be excluded (inconclusive)");
    R.pass = R.reasons.empty();
    return R;
}

namespace {

// Squarefree part of n, sign included: the discriminant class of the
// quadratic resolvent field.
long squarefree_part(const mpz_class& n) {
    mpz_class m = n < 0 ? mpz_class(-n) : n;
    long out = n < 0 ? -1 : 1;
    for (long p : core::prime_support(m)) {
        int v = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
            m /= p;
            ++v;
        }
        if (v % 2)
            out *= p;
    }
    return out;
}

std::string quartic_display(const core::IntPoly& f) { return f.str(); }

} // namespace

FSReport fs_verify(const bianchi::BianchiNewform& f, const curves::CurveK& C_K,
                   const curves::CurveQ& C_Q, const SexticField& N,
                   const std::vector<long>& T) {
    FSReport R;
    R.assumption = "assumes the residual mod-2 representation is unramified at "
                   "every odd prime away from the level";
    try {
        // (1) the form is fixed by the sigma-tau twist
        const auto st = bianchi::check_sigma_tau(f);
        R.sigma_tau_ok = st.ok;
        R.sigma_tau_offending = st.offending;

        // moduli identification: the two curves must share weighted-projective
        // invariants (the twist relation)
        R.twist_compatible =
            curves::wp_equivalent(curves::igusa_clebsch(C_K), curves::igusa_clebsch(C_Q))
                .equivalent;

        // (2) exact Euler-factor matches at table primes and primes above T
        std::vector<quad::PrimeOfK> primes;
        std::set<std::string> seen;
        for (const auto& e : f.entries)
            if (seen.insert(e.prime.tag).second)
                primes.push_back(e.prime);
        for (long t : T) {
            const auto split = quad::splitting(f.field, t);
            if (split.kind == quad::SplitKind::Ramified)
                throw SchemaError("comparison set includes the ramified prime " +
                                  std::to_string(t));
            for (const auto& fp : split.primes)
                if (seen.insert(fp.tag).second)
                    primes.push_back(fp);
        }
        std::sort(primes.begin(), primes.end(),
                  [](const quad::PrimeOfK& a, const quad::PrimeOfK& b) {
                      return a.norm != b.norm ? a.norm < b.norm : a.tag < b.tag;
                  });
        for (const auto& fp : primes) {
            EulerRow row;
            row.tag = fp.tag;
            row.norm = fp.norm;
            const core::IntPoly expected = bianchi::q_poly(f, fp);
            row.expected = quartic_display(expected);
            const curves::LPoly L = curves::curve_lpoly(C_K, fp);
            const core::IntPoly computed = curves::poly_reverse(L.poly, 4);
            row.computed = quartic_display(computed);
            row.pass = expected == computed;
            R.euler_matches.push_back(std::move(row));
        }

        // (3) parity against the S3 Frobenius classes, over the same rational
        // primes; 2 is the residue characteristic, and primes dividing the
        // polynomial discriminant get the maximal-order certificate instead of
        // the polynomial multiset when the field itself is unramified there.
        std::set<long> rational;
        for (const auto& fp : primes)
            rational.insert(fp.p);
        for (long p : rational) {
            if (p == 2) {
                R.skipped_parity_primes.push_back(p);
                continue;
            }
            if (mpz_divisible_ui_p(N.disc.get_mpz_t(), static_cast<unsigned long>(p))) {
                const auto cert = core::certify_unramified(N.poly, p);
                if (!cert.unramified) {
                    R.skipped_parity_primes.push_back(p);
                    continue;
                }
                R.parity_matches.push_back(
                    parity_row(f, p, s3_class_from_certificate(cert),
                               "order-certificate"));
            } else {
                R.parity_matches.push_back(parity_row(f, p, s3_frobenius(N, p), "ddf"));
            }
        }
        std::sort(R.parity_matches.begin(), R.parity_matches.end(),
                  [](const ParityRow& a, const ParityRow& b) { return a.p < b.p; });

        // (4) quadratic-subfield sieve, odd-trace primes taken from the data
        std::vector<long> odd_primes;
        for (const auto& row : R.parity_matches)
            if (row.parity == 1)
                odd_primes.push_back(row.p);
        const long q0 = squarefree_part(-f.field.D);
        R.sieve = quad_subfield_sieve({-1, 2, -2, q0, -q0, 2 * q0, -2 * q0}, odd_primes);
        R.sieve_expected_survivor = squarefree_part(N.disc);
        R.sieve_ok = R.sieve.survivors ==
                     std::vector<long>{R.sieve_expected_survivor};

        // (5) ramification support, refined by round-2 certificates at any
        // support prime outside {2, q0}
        R.sextic_irreducible = true; // certified at construction
        R.support = ramification_support(N);
        R.support_in_target = true;
        R.refined_support_ok = true;
        for (long p : R.support) {
            if (p == 2 || p == q0)
                continue;
            R.support_in_target = false;
            const auto cert = core::certify_unramified(N.poly, p);
            R.certificates.push_back(cert);
            R.refined_support_ok = R.refined_support_ok && cert.unramified;
        }

        // (6) an order-2 and an order-3 element generate all of GL2(F2)
        const auto surj = residual_surjectivity(
            f, core::class_number_imag_quad(f.field.D));
        R.surjectivity_pass = surj.pass;
        R.surjectivity_reasons = surj.reasons;
    } catch (const Error& e) {
        R.error = e.what();
        R.overall = false;
        return R;
    }

    bool ok = R.sigma_tau_ok && R.twist_compatible && R.sieve_ok &&
              R.sextic_irreducible && R.refined_support_ok && R.surjectivity_pass;
    for (const auto& row : R.euler_matches)
        ok = ok && row.pass;
    for (const auto& row : R.parity_matches)
        ok = ok && row.pass;
    R.overall = ok;
    return R;
}

std::string render_report(const FSReport& R) {
    std::ostringstream os;
    os << "modularity verification report\n";
    os << "note: " << R.assumption << "\n\n";
    if (!R.error.empty())
        os << "aborted: " << R.error << "\n\n";

    os << "sigma-tau symmetry: " << (R.sigma_tau_ok ? "ok" : "FAIL");
    if (!R.sigma_tau_offending.empty()) {
        os << " (offending primes:";
        for (long p : R.sigma_tau_offending)
            os << " " << p;
        os << ")";
    }
    os << "\n";
    os << "twist moduli match: " << (R.twist_compatible ? "ok" : "FAIL") << "\n\n";

    os << "euler factors (" << R.euler_matches.size() << " primes):\n";
    for (const auto& row : R.euler_matches) {
        os << "  " << row.tag << " norm " << row.norm << ": "
           << (row.pass ? "match" : "MISMATCH");
        if (!row.pass)
            os << "\n    expected " << row.expected << "\n    computed " << row.computed;
        os << "\n";
    }
    os << "\n";

    os << "trace parity vs Frobenius class:\n";
    for (const auto& row : R.parity_matches)
        os << "  p=" << row.p << " " << s3_name(row.cls) << " (" << row.method
           << "), parity " << row.parity << ": " << (row.pass ? "ok" : "FAIL")
           << "\n";
    if (!R.skipped_parity_primes.empty()) {
        os << "  skipped:";
        for (long p : R.skipped_parity_primes)
            os << " " << p;
        os << " (residue characteristic or ramified)\n";
    }
    os << "\n";

    os << "quadratic subfield sieve: survivors {";
    for (size_t i = 0; i < R.sieve.survivors.size(); ++i)
        os << (i ? ", " : "") << R.sieve.survivors[i];
    os << "} expected {" << R.sieve_expected_survivor << "}: "
       << (R.sieve_ok ? "ok" : "FAIL") << "\n";
    for (const auto& e : R.sieve.eliminated)
        os << "  d=" << e.d << " (disc " << e.fund << ") eliminated by p=" << e.witness
           << "\n";
    os << "\n";

    os << "sextic field: irreducible " << (R.sextic_irreducible ? "ok" : "FAIL")
       << ", discriminant support {";
    for (size_t i = 0; i < R.support.size(); ++i)
        os << (i ? ", " : "") << R.support[i];
    os << "}";
    if (!R.support_in_target) {
        os << "; extra support certified unramified:";
        for (const auto& c : R.certificates)
            os << " p=" << c.p << (c.unramified ? " ok" : " FAIL") << " (index "
               << c.index.get_str() << ")";
    }
    os << " -> " << (R.refined_support_ok ? "ok" : "FAIL") << "\n";

    os << "residual surjectivity: " << (R.surjectivity_pass ? "ok" : "FAIL") << "\n";
    for (const auto& r : R.surjectivity_reasons)
        os << "  " << r << "\n";
    os << "\n";

    os << "overall: " << (R.overall ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string render_report_json(const FSReport& R) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["assumption"] = R.assumption;
    if (!R.error.empty())
        j["error"] = R.error;
    j["sigma_tau"] = {{"ok", R.sigma_tau_ok}, {"offending", R.sigma_tau_offending}};
    j["twist_compatible"] = R.twist_compatible;
    j["euler_matches"] = nlohmann::ordered_json::array();
    for (const auto& row : R.euler_matches)
        j["euler_matches"].push_back({{"tag", row.tag},
                                      {"norm", row.norm.get_str()},
                                      {"pass", row.pass},
                                      {"expected", row.expected},
                                      {"computed", row.computed}});
    j["parity_matches"] = nlohmann::ordered_json::array();
    for (const auto& row : R.parity_matches)
        j["parity_matches"].push_back({{"p", row.p},
                                       {"class", s3_name(row.cls)},
                                       {"parity", row.parity},
                                       {"method", row.method},
                                       {"pass", row.pass}});
    j["skipped_parity_primes"] = R.skipped_parity_primes;
    j["sieve_survivors"] = R.sieve.survivors;
    j["sieve_eliminations"] = nlohmann::ordered_json::array();
    for (const auto& e : R.sieve.eliminated)
        j["sieve_eliminations"].push_back(
            {{"d", e.d}, {"fundamental", e.fund.get_str()}, {"witness", e.witness}});
    nlohmann::ordered_json sx;
    sx["irreducible"] = R.sextic_irreducible;
    sx["ramification_support"] = R.support;
    sx["support_in_target"] = R.support_in_target;
    sx["unramified_certificates"] = nlohmann::ordered_json::array();
    for (const auto& c : R.certificates)
        sx["unramified_certificates"].push_back({{"p", c.p},
                                                 {"unramified", c.unramified},
                                                 {"index", c.index.get_str()},
                                                 {"factors", c.residue_factor_count}});
    sx["refined_support_ok"] = R.refined_support_ok;
    nlohmann::ordered_json cc = nlohmann::ordered_json::array();
    for (const auto& row : R.parity_matches)
        cc.push_back({{"p", row.p},
                      {"class", s3_name(row.cls)},
                      {"parity", row.parity},
                      {"pass", row.pass}});
    sx["class_compatibility"] = cc;
    j["sextic_checks"] = sx;
    j["surjectivity"] = {{"pass", R.surjectivity_pass},
                         {"reasons", R.surjectivity_reasons}};
    j["overall"] = R.overall ? "pass" : "fail";
    return j.dump(2) + "\n";
}

} // namespace paralift::fs
