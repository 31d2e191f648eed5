#include "paralift/bianchi.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace paralift::bianchi {

using nlohmann::json;

const BianchiNewform::Entry* BianchiNewform::find(const std::string& canonical_tag) const {
    for (const Entry& e : entries)
        if (e.prime.tag == canonical_tag) return &e;
    return nullptr;
}

const quad::RmElement& BianchiNewform::eigenvalue(const quad::PrimeOfK& fp) const {
    const Entry* e = find(fp.tag);
    if (!e) throw UnknownPrime("no eigenvalue stored for " + fp.tag);
    return e->a;
}

BianchiNewform load_newform(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& ex) {
        throw SchemaError(std::string("newform document is not valid JSON: ") + ex.what());
    }
    if (!doc.is_object()) throw SchemaError("newform document must be a JSON object");
    for (const char* key : {"field_discriminant", "level_norm", "weight", "character", "coefficient_ring", "entries"})
        if (!doc.contains(key)) throw SchemaError(std::string("missing key: ") + key);

    if (!doc["character"].is_string() || doc["character"].get<std::string>() != "trivial")
        throw NontrivialCharacter("only trivial character is supported");
    if (!doc["coefficient_ring"].is_string() || doc["coefficient_ring"].get<std::string>() != "Z[sqrt2]")
        throw SchemaError("coefficient_ring must be \"Z[sqrt2]\"");
    if (!doc["weight"].is_number_integer()) throw SchemaError("weight must be an integer");
    const long weight = doc["weight"].get<long>();
    if (weight % 2 != 0) throw OddWeight("weight must be even");
    if (weight < 2) throw SchemaError("weight must be at least 2");
    if (!doc["field_discriminant"].is_number_integer()) throw SchemaError("field_discriminant must be an integer");
    if (!doc["level_norm"].is_number_integer()) throw SchemaError("level_norm must be an integer");
    const long level_norm = doc["level_norm"].get<long>();
    if (level_norm < 1) throw SchemaError("level_norm must be positive");

    BianchiNewform f{quad::ImagQuadField(doc["field_discriminant"].get<long>()), mpz_class(level_norm),
                     static_cast<int>(weight), {}};

    if (!doc["entries"].is_array()) throw SchemaError("entries must be an array");
    std::set<std::string> seen;
    for (const json& ent : doc["entries"]) {
        if (!ent.is_object() || !ent.contains("tag") || !ent.contains("a") || !ent.contains("b"))
            throw SchemaError("entry needs keys tag, a, b");
        if (!ent["tag"].is_string() || !ent["a"].is_number_integer() || !ent["b"].is_number_integer())
            throw SchemaError("entry fields have wrong types");
        BianchiNewform::Entry e;
        e.prime = quad::parse_ideal_tag(f.field, ent["tag"].get<std::string>());
        e.a = quad::RmElement(mpz_class(ent["a"].get<long>()), mpz_class(ent["b"].get<long>()));
        if (!seen.insert(e.prime.tag).second) throw SchemaError("duplicate entry for " + e.prime.tag);
        f.entries.push_back(std::move(e));
    }
    // Split primes come in conjugate pairs or not at all.
    for (const auto& e : f.entries)
        if (e.prime.kind == quad::SplitKind::Split && !f.find(quad::conj_prime(e.prime).tag))
            throw SchemaError("missing conjugate entry for " + e.prime.tag);
    return f;
}

EulerFactorK euler_factor_K(const BianchiNewform& f, const quad::PrimeOfK& fp) {
    const quad::RmElement& a = f.eigenvalue(fp);
    EulerFactorK ef;
    ef.prime = fp;
    const quad::RmElement one(1, 0);
    if (mpz_divisible_p(f.level_norm.get_mpz_t(), fp.norm.get_mpz_t()))
        ef.poly = {one, -a};
    else
        ef.poly = {one, -a, quad::RmElement(fp.norm, 0)};
    return ef;
}

core::IntPoly q_poly(const quad::RmElement& a, const mpz_class& N) {
    const mpz_class& alpha = a.a;
    const mpz_class& beta = a.b;
    return core::IntPoly(
        {N * N, -2 * alpha * N, 2 * N + alpha * alpha - 2 * beta * beta, -2 * alpha, mpz_class(1)});
}

core::IntPoly q_poly(const BianchiNewform& f, const quad::PrimeOfK& fp) {
    return q_poly(f.eigenvalue(fp), fp.norm);
}

SigmaTauResult check_sigma_tau(const BianchiNewform& f) {
    SigmaTauResult res;
    std::set<long> bad;
    for (const auto& e : f.entries) {
        if (e.prime.kind == quad::SplitKind::Split) {
            const BianchiNewform::Entry* other = f.find(quad::conj_prime(e.prime).tag);
            if (other && other->a != e.a.tau()) bad.insert(e.prime.p);
        } else if (e.a.b != 0) {
            bad.insert(e.prime.p);
        }
    }
    res.offending.assign(bad.begin(), bad.end());
    res.ok = res.offending.empty();
    return res;
}

} // namespace paralift::bianchi
