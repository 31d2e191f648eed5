#include <doctest.h>

#include <json.hpp>

#include <map>
#include <string>

#include "paralift/bianchi.hpp"
#include "paralift/data.hpp"

using namespace paralift;
using quad::RmElement;

namespace {

// The eigenvalue table's quartics by tag, canonical monic printing.
const std::map<std::string, std::string> kQuartics = {
    {"[2, w+1]", "x^4 + 2x^3 + 3x^2 + 4x + 4"},
    {"[2, w+2]", "x^4 + 2x^3 + 3x^2 + 4x + 4"},
    {"[7, 2w+5]", "x^4 - 4x^3 + 16x^2 - 28x + 49"},
    {"[7, 2w]", "x^4 - 4x^3 + 16x^2 - 28x + 49"},
    {"[3]", "x^4 + 6x^3 + 27x^2 + 54x + 81"},
    {"[17, 2w+9]", "x^4 + 2x^3 + 27x^2 + 34x + 289"},
    {"[17, 2w+6]", "x^4 + 2x^3 + 27x^2 + 34x + 289"},
    {"[19, 2w+8]", "x^4 + 8x^3 + 52x^2 + 152x + 361"},
    {"[19, 2w+9]", "x^4 + 8x^3 + 52x^2 + 152x + 361"},
    {"[5]", "x^4 + 50x^2 + 625"},
    {"[29, 2w+25]", "x^4 - 6x^3 + 59x^2 - 174x + 841"},
    {"[29, 2w+2]", "x^4 - 6x^3 + 59x^2 - 174x + 841"},
    {"[31, 2w+4]", "x^4 + 4x^3 + 34x^2 + 124x + 961"},
    {"[31, 2w+25]", "x^4 + 4x^3 + 34x^2 + 124x + 961"},
};

std::string tamper(const std::string& json_text,
                   const std::function<void(nlohmann::json&)>& f) {
    auto doc = nlohmann::json::parse(json_text);
    f(doc);
    return doc.dump();
}

} // namespace

TEST_CASE("bundled newform loads with the expected shape") {
    auto f = data::bundled_newform();
    CHECK(f.field.D == -223);
    CHECK(f.level_norm == 1);
    CHECK(f.weight == 2);
    CHECK(f.entries.size() == 14);
    // Entries are stored in the document's order: norm-ascending.
    mpz_class last = 0;
    for (const auto& e : f.entries) {
        CHECK(e.prime.norm >= last);
        last = e.prime.norm;
    }
}

TEST_CASE("eigenvalue lookup by tag and by prime") {
    auto f = data::bundled_newform();
    CHECK(f.eigenvalue(quad::parse_ideal_tag(f.field, "[2, w+1]")) == RmElement(-1, 1));
    CHECK(f.eigenvalue(quad::parse_ideal_tag(f.field, "[2, w+2]")) == RmElement(-1, -1));
    CHECK(f.eigenvalue(quad::parse_ideal_tag(f.field, "[3]")) == RmElement(-3, 0));
    CHECK(f.eigenvalue(quad::parse_ideal_tag(f.field, "[5]")) == RmElement(0, 0));
    CHECK(f.eigenvalue(quad::parse_ideal_tag(f.field, "[29, 2w+25]")) == RmElement(3, 2));
    CHECK(f.find("[31, 2w+4]") != nullptr);
    CHECK(f.find("[11]") == nullptr);
    CHECK_THROWS_AS(f.eigenvalue(quad::parse_ideal_tag(f.field, "[11]")),
                    bianchi::UnknownPrime);
}

TEST_CASE("sigma-tau symmetry holds on the bundled data") {
    auto f = data::bundled_newform();
    auto st = bianchi::check_sigma_tau(f);
    CHECK(st.ok);
    CHECK(st.offending.empty());
}

TEST_CASE("sigma-tau detects a broken conjugate pair") {
    auto text = data::asset_text("f223");
    auto f = bianchi::load_newform(tamper(text, [](nlohmann::json& d) {
        d["entries"][0]["a"] = d["entries"][0]["a"].get<long>() + 1;
    }));
    auto st = bianchi::check_sigma_tau(f);
    CHECK(!st.ok);
    REQUIRE(!st.offending.empty());
    CHECK(st.offending[0] == 2);
}

TEST_CASE("quartics from eigenvalues match the table byte-for-byte") {
    auto f = data::bundled_newform();
    for (const auto& e : f.entries) {
        CAPTURE(e.prime.tag);
        CHECK(bianchi::q_poly(f, e.prime).str() == kQuartics.at(e.prime.tag));
    }
}

TEST_CASE("q_poly closed form") {
    // a = alpha + beta e at norm N: ascending
    // [N^2, -2 alpha N, 2N + alpha^2 - 2 beta^2, -2 alpha, 1].
    auto q = bianchi::q_poly(RmElement(-1, 1), mpz_class(2));
    CHECK(q.coeff(0) == 4);
    CHECK(q.coeff(1) == 4);
    CHECK(q.coeff(2) == 3);
    CHECK(q.coeff(3) == 2);
    CHECK(q.coeff(4) == 1);
    // tau-conjugate eigenvalues give the same quartic.
    CHECK(bianchi::q_poly(RmElement(-1, -1), mpz_class(2)) == q);
    // The quartic factors as (x^2 - a x + N)(x^2 - tau(a) x + N): check by
    // evaluating the product at several integers in Z[sqrt 2].
    RmElement a(3, 2);
    mpz_class N(29);
    auto quartic = bianchi::q_poly(a, N);
    for (long x = -3; x <= 3; ++x) {
        RmElement X(x, 0);
        RmElement lhs = (X * X - a * X + RmElement(N, 0)) *
                        (X * X - a.tau() * X + RmElement(N, 0));
        CHECK(lhs == RmElement(quartic.eval(x), 0));
    }
}

TEST_CASE("euler factor over K") {
    auto f = data::bundled_newform();
    auto fp = quad::parse_ideal_tag(f.field, "[2, w+1]");
    auto E = bianchi::euler_factor_K(f, fp);
    CHECK(E.prime == fp);
    REQUIRE(E.poly.size() == 3); // 1 - a x + N x^2
    CHECK(E.poly[0] == RmElement(1, 0));
    CHECK(E.poly[1] == RmElement(1, -1)); // -(e - 1)
    CHECK(E.poly[2] == RmElement(2, 0));
    CHECK_THROWS_AS(bianchi::euler_factor_K(f, quad::parse_ideal_tag(f.field, "[11]")),
                    bianchi::UnknownPrime);
}

TEST_CASE("newform document validation") {
    auto text = data::asset_text("f223");
    CHECK_THROWS_AS(bianchi::load_newform("not json"), bianchi::SchemaError);
    CHECK_THROWS_AS(bianchi::load_newform("{}"), bianchi::SchemaError);
    CHECK_THROWS_AS(bianchi::load_newform(tamper(
                        text, [](nlohmann::json& d) { d["weight"] = 3; })),
                    bianchi::OddWeight);
    CHECK_THROWS_AS(bianchi::load_newform(tamper(
                        text, [](nlohmann::json& d) { d["character"] = "quadratic"; })),
                    bianchi::NontrivialCharacter);
    CHECK_THROWS_AS(bianchi::load_newform(tamper(
                        text,
                        [](nlohmann::json& d) { d["coefficient_ring"] = "Z[sqrt3]"; })),
                    bianchi::SchemaError);
    CHECK_THROWS_AS(bianchi::load_newform(tamper(
                        text,
                        [](nlohmann::json& d) { d["field_discriminant"] = -221; })),
                    quad::BadDiscriminant);
    CHECK_THROWS_AS(bianchi::load_newform(tamper(
                        text,
                        [](nlohmann::json& d) { d["entries"][3]["tag"] = "[2, w+1]"; })),
                    bianchi::SchemaError); // duplicate tag
    CHECK_THROWS_AS(bianchi::load_newform(tamper(
                        text,
                        [](nlohmann::json& d) { d["entries"][0]["tag"] = "[6]"; })),
                    quad::NotAPrimeIdeal);
    // A tag that is valid but uncanonical is accepted and canonicalized.
    auto f = bianchi::load_newform(tamper(
        text, [](nlohmann::json& d) { d["entries"][0]["tag"] = "[2,w+1]"; }));
    CHECK(f.entries[0].prime.tag == "[2, w+1]");
}
