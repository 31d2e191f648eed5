#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "paralift/cli.hpp"
#include "paralift/data.hpp"

using namespace paralift;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    RunResult r;
    r.code = cli::run_command(std::move(args), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const std::string path = "/tmp/paralift_test_" + name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    f << text;
    return path;
}

// Bundled newform document with one eigenvalue bumped: breaks sigma-tau
// symmetry and the Euler match at that prime, but stays schema-valid.
std::string tampered_form_path() {
    auto doc = nlohmann::json::parse(data::load_text("builtin:f223", ""));
    doc["entries"][0]["a"] = doc["entries"][0]["a"].get<long>() + 1;
    return write_temp("f223_tampered.json", doc.dump());
}

} // namespace

TEST_CASE("count subcommand") {
    auto r = run({"count", "--curve", "builtin:C", "--prime", "[2, w+1]"});
    CHECK(r.code == 0);
    CHECK(r.out == "5\n");
    CHECK(r.err.empty());

    auto r2 = run({"count", "--prime", "[2, w+1]", "--power", "2"});
    CHECK(r2.code == 0);
    CHECK(r2.out == "7\n");

    auto rj = run({"--format", "json", "count", "--prime", "[3]"});
    CHECK(rj.code == 0);
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["tag"] == "[3]");
    CHECK(j["q"] == 9);
    CHECK(j["points"] == 16);
}

TEST_CASE("verify subcommand passes on the bundled inputs") {
    auto r = run({"verify", "--bundle", "builtin"});
    CHECK(r.code == 0);
    CHECK(r.out.find("modularity verification report") != std::string::npos);
    CHECK(r.out.find("overall: PASS") != std::string::npos);
    CHECK(r.err.empty());

    auto rj = run({"--format", "json", "verify"});
    CHECK(rj.code == 0);
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["overall"] == "pass");
    CHECK(j["euler_matches"].size() == 14);
    CHECK(j["sieve_survivors"] == std::vector<long>{223});
}

TEST_CASE("verify output is deterministic") {
    auto a = run({"verify"});
    auto b = run({"verify"});
    CHECK(a.out == b.out);
    auto c = run({"--jobs", "3", "verify"});
    CHECK(a.out == c.out);
}

TEST_CASE("euler subcommand") {
    auto r = run({"euler", "--prime", "[3]"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[3] norm 9") != std::string::npos);
    CHECK(r.out.find("match") != std::string::npos);
    CHECK(r.out.find("MISMATCH") == std::string::npos);

    auto all = run({"euler", "--all"});
    CHECK(all.code == 0);

    auto rj = run({"--format", "json", "euler", "--prime", "[2, w+1]", "--prime", "[5]"});
    CHECK(rj.code == 0);
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["euler"].size() == 2);
    CHECK(j["euler"][0]["match"] == true);
    CHECK(j["euler"][0]["form"] == j["euler"][0]["curve"]);

    // No primes requested at all is a usage error.
    CHECK(run({"euler"}).code == 2);
}

TEST_CASE("tampered inputs flip the exit code to 1") {
    const auto path = tampered_form_path();

    auto e = run({"euler", "--form", path, "--all"});
    CHECK(e.code == 1);
    CHECK(e.out.find("MISMATCH") != std::string::npos);

    auto v = run({"verify", "--form", path});
    CHECK(v.code == 1);
    CHECK(v.out.find("sigma-tau symmetry: FAIL") != std::string::npos);
    CHECK(v.out.find("overall: FAIL") != std::string::npos);

    auto vj = run({"--format", "json", "verify", "--form", path});
    CHECK(vj.code == 1);
    CHECK(nlohmann::json::parse(vj.out)["overall"] == "fail");
    std::remove(path.c_str());
}

TEST_CASE("data directory override is honored") {
    // Stage all four documents, then tamper only the staged form: the run
    // must read from the directory, not the bundled copies.
    const std::string dir = "/tmp/paralift_test_datadir";
    std::system(("mkdir -p " + dir).c_str());
    auto doc = nlohmann::json::parse(data::load_text("builtin:f223", ""));
    doc["entries"][0]["a"] = doc["entries"][0]["a"].get<long>() + 1;
    std::ofstream(dir + "/f223.json") << doc.dump();
    std::ofstream(dir + "/C.kcurve") << data::load_text("builtin:C", "");
    std::ofstream(dir + "/Cprime.qcurve") << data::load_text("builtin:Cprime", "");
    std::ofstream(dir + "/sextic.json") << data::load_text("builtin:sextic", "");

    auto r = run({"--data-dir", dir, "verify"});
    CHECK(r.code == 1);
    CHECK(r.out.find("overall: FAIL") != std::string::npos);

    // Missing asset in the directory is an input error.
    std::remove((dir + "/sextic.json").c_str());
    CHECK(run({"--data-dir", dir, "verify"}).code == 2);
}

TEST_CASE("lift subcommand") {
    auto r = run({"lift"});
    CHECK(r.code == 0);
    CHECK(r.out.find("paramodular level 49729 (weight 2)") != std::string::npos);
    CHECK(r.out.find("p=2: 1 + 2x + 3x^2 + 4x^3 + 4x^4   lambda=-2 mu=1/4") !=
          std::string::npos);
    CHECK(r.out.find("p=3: 1 + 3x^2 + 9x^4   lambda=0 mu=-1/9") != std::string::npos);

    auto rj = run({"--format", "json", "lift", "--weight", "2"});
    CHECK(rj.code == 0);
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["level"] == "49729");
    CHECK(j["weight"] == 2);
    CHECK(j["factors"].size() == 8);
    CHECK(j["factors"][0]["p"] == 2);

    // The Arakawa relations at any other weight are inconsistent with a
    // weight-2 factor, so this is an input error, not a silent answer.
    CHECK(run({"lift", "--weight", "4"}).code == 2);
    CHECK(run({"lift", "--weight", "3"}).code == 2);
}

TEST_CASE("invariants subcommand") {
    auto r = run({"invariants"});
    CHECK(r.code == 0);
    CHECK(r.out.find("curve over K: IC (-24, -540, 4968, 4096), discriminant 1") !=
          std::string::npos);
    CHECK(r.out.find("weighted-projective match with u = -177433072") !=
          std::string::npos);

    auto rj = run({"--format", "json", "invariants"});
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["wp_equivalent"] == true);
    CHECK(j["u"] == "-177433072");
    CHECK(j["curve_K"]["ic"]["I2"] == "-24");
}

TEST_CASE("humbert subcommand") {
    auto r = run({"humbert", "8", "-2"});
    CHECK(r.code == 0);
    CHECK(r.out == "IC (-224, 580, -67352, -16384)\nz^2 = 13768\n");

    // Negative rationals need the positional separator; bare -2 parses.
    auto rj = run({"--format", "json", "humbert", "--", "1/2", "-3/4"});
    CHECK(rj.code == 0);
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["r"] == "1/2");
    CHECK(j["s"] == "-3/4");
    CHECK(j["z_squared"] == "121/2");

    CHECK(run({"humbert", "8", "0"}).code == 2);    // degenerate parameters
    CHECK(run({"humbert", "8", "abc"}).code == 2);  // not a rational
    CHECK(run({"humbert", "8"}).code == 2);         // missing positional
}

TEST_CASE("classnumber subcommand") {
    auto r = run({"classnumber", "-223"});
    CHECK(r.code == 0);
    CHECK(r.out == "h(-223) = 7\n");

    auto rj = run({"--format", "json", "classnumber", "-4"});
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["h"] == 1);

    CHECK(run({"classnumber", "-221"}).code == 2); // not fundamental
    CHECK(run({"classnumber"}).code == 2);
}

TEST_CASE("sieve subcommand") {
    auto r = run({"sieve"});
    CHECK(r.code == 0);
    CHECK(r.out.find("odd-trace primes: 3 17 29") != std::string::npos);
    CHECK(r.out.find("survivors: 223") != std::string::npos);
    CHECK(r.out.find("pass") != std::string::npos);

    auto rj = run({"--format", "json", "sieve"});
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["odd_trace_primes"] == std::vector<long>{3, 17, 29});
    CHECK(j["survivors"] == std::vector<long>{223});
    CHECK(j["pass"] == true);
    CHECK(j["eliminations"].size() == 6);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"count"}).code == 2);                          // missing --prime
    CHECK(run({"count", "--prime", "[4]"}).code == 2);        // not prime
    CHECK(run({"count", "--prime", "[11, w+1]"}).code == 2);  // inert, bad tag
    CHECK(run({"--format", "yaml", "verify"}).code == 2);
    CHECK(run({"verify", "--bundle", "other"}).code == 2);
    CHECK(run({"verify", "--t", "3,223"}).code == 1); // ramified: honest fail
    auto bad = run({"count", "--prime", "[4]"});
    CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("help exits 0") {
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
    CHECK(run({"verify", "--help"}).code == 0);
}
