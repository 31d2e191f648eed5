#include "paralift/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <set>

#include "paralift/data.hpp"
#include "paralift/fs.hpp"
#include "paralift/gsp4.hpp"
#include "paralift/humbert.hpp"
#include "paralift/igusa.hpp"
#include "paralift/lift.hpp"
#include "paralift/numthy.hpp"

namespace paralift::cli {

namespace {

using nlohmann::ordered_json;

struct Ctx {
    std::string format = "text";
    std::string data_dir;
    int jobs = 0; // 0 = auto; execution is serial and deterministic either way
    std::ostream* out = nullptr;
    std::ostream* err = nullptr;
    int exit_code = 0;
};

std::string resolve_ref(const std::string& ref, const char* builtin_name) {
    return ref == "builtin" ? std::string("builtin:") + builtin_name : ref;
}

bianchi::BianchiNewform get_form(const Ctx& c, const std::string& ref) {
    return bianchi::load_newform(data::load_text(resolve_ref(ref, "f223"), c.data_dir));
}

curves::CurveK get_curve_K(const Ctx& c, const std::string& ref) {
    return curves::load_curve_K(data::load_text(resolve_ref(ref, "C"), c.data_dir));
}

curves::CurveQ get_curve_Q(const Ctx& c, const std::string& ref) {
    return curves::load_curve_Q(data::load_text(resolve_ref(ref, "Cprime"), c.data_dir));
}

fs::SexticField get_sextic(const Ctx& c, const std::string& ref) {
    return fs::load_sextic(data::load_text(resolve_ref(ref, "sextic"), c.data_dir));
}

// Ascending display for Euler factors: "1 - (1/2)x + 2x^2 + 2x^3".
std::string rational_poly_str(const std::vector<mpq_class>& poly) {
    std::string s;
    bool first = true;
    for (size_t i = 0; i < poly.size(); ++i) {
        const mpq_class& c = poly[i];
        if (c == 0)
            continue;
        const bool neg = c < 0;
        mpq_class mag = neg ? mpq_class(-c) : c;
        if (first) {
            if (neg)
                s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        std::string m = mag.get_str();
        if (i == 0) {
            s += m;
        } else {
            if (mag != 1)
                s += mag.get_den() == 1 ? m : "(" + m + ")";
            s += "x";
            if (i > 1)
                s += "^" + std::to_string(i);
        }
    }
    return first ? "0" : s;
}

std::string ic_str(const curves::IgusaClebsch& ic) {
    return "(" + ic.I2.get_str() + ", " + ic.I4.get_str() + ", " + ic.I6.get_str() +
           ", " + ic.I10.get_str() + ")";
}

ordered_json ic_json(const curves::IgusaClebsch& ic) {
    return {{"I2", ic.I2.get_str()},
            {"I4", ic.I4.get_str()},
            {"I6", ic.I6.get_str()},
            {"I10", ic.I10.get_str()}};
}

void emit(const Ctx& c, const ordered_json& j) { *c.out << j.dump(2) << "\n"; }

// Rational primes under the form's entries, ascending.
std::vector<long> rational_primes(const bianchi::BianchiNewform& f) {
    std::set<long> ps;
    for (const auto& e : f.entries)
        ps.insert(e.prime.p);
    return {ps.begin(), ps.end()};
}

void cmd_verify(Ctx& c, const std::string& form_ref, const std::string& curve_ref,
                const std::string& qcurve_ref, const std::string& sextic_ref,
                const std::vector<long>& T) {
    const auto f = get_form(c, form_ref);
    const auto CK = get_curve_K(c, curve_ref);
    const auto CQ = get_curve_Q(c, qcurve_ref);
    const auto N = get_sextic(c, sextic_ref);
    const auto R = fs::fs_verify(f, CK, CQ, N, T);
    *c.out << (c.format == "json" ? fs::render_report_json(R) : fs::render_report(R));
    c.exit_code = R.overall ? 0 : 1;
}

void cmd_euler(Ctx& c, const std::string& form_ref, const std::string& curve_ref,
               std::vector<std::string> tags, bool all) {
    const auto f = get_form(c, form_ref);
    const auto CK = get_curve_K(c, curve_ref);
    if (all) {
        tags.clear();
        std::set<std::string> seen;
        for (const auto& e : f.entries)
            if (seen.insert(e.prime.tag).second)
                tags.push_back(e.prime.tag);
    }
    if (tags.empty())
        throw data::UnknownAsset("euler needs --prime TAG or --all");
    bool all_match = true;
    ordered_json rows = ordered_json::array();
    for (const auto& t : tags) {
        const auto fp = quad::parse_ideal_tag(f.field, t);
        const auto expected = bianchi::q_poly(f, fp);
        const auto L = curves::curve_lpoly(CK, fp);
        const auto computed = curves::poly_reverse(L.poly, 4);
        const bool match = expected == computed;
        all_match = all_match && match;
        if (c.format == "json") {
            rows.push_back({{"tag", fp.tag},
                            {"norm", fp.norm.get_str()},
                            {"form", expected.str()},
                            {"curve", computed.str()},
                            {"match", match}});
        } else {
            *c.out << fp.tag << " norm " << fp.norm << "\n"
                   << "  form:  " << expected.str() << "\n"
                   << "  curve: " << computed.str() << "\n"
                   << "  " << (match ? "match" : "MISMATCH") << "\n";
        }
    }
    if (c.format == "json")
        emit(c, {{"schema_version", 1}, {"euler", rows}});
    c.exit_code = all_match ? 0 : 1;
}

void cmd_lift(Ctx& c, const std::string& form_ref, int weight) {
    const auto f = get_form(c, form_ref);
    const auto level = lift::paramodular_level(f.field.D, f.level_norm);
    ordered_json rows = ordered_json::array();
    if (c.format != "json")
        *c.out << "paramodular level " << level << " (weight " << weight << ")\n";
    for (long p : rational_primes(f)) {
        const auto S = lift::spinor_factor(f, p);
        const auto E = lift::arakawa_eigen(S, weight);
        if (c.format == "json") {
            ordered_json coeffs = ordered_json::array();
            for (const auto& q : S.poly)
                coeffs.push_back(q.get_str());
            rows.push_back({{"p", p},
                            {"factor", coeffs},
                            {"lambda", E.lambda.get_str()},
                            {"mu", E.mu.get_str()}});
        } else {
            *c.out << "p=" << p << ": " << rational_poly_str(S.poly)
                   << "   lambda=" << E.lambda.get_str() << " mu=" << E.mu.get_str()
                   << "\n";
        }
    }
    if (c.format == "json")
        emit(c, {{"schema_version", 1},
                 {"level", level.get_str()},
                 {"weight", weight},
                 {"factors", rows}});
}

void cmd_invariants(Ctx& c, const std::string& curve_ref, const std::string& qcurve_ref) {
    const auto CK = get_curve_K(c, curve_ref);
    const auto CQ = get_curve_Q(c, qcurve_ref);
    const auto icK = curves::igusa_clebsch(CK);
    const auto icQ = curves::igusa_clebsch(CQ);
    const auto dK = curves::curve_discriminant(CK);
    const auto dQ = curves::curve_discriminant(CQ);
    const auto wp = curves::wp_equivalent(icK, icQ);
    if (c.format == "json") {
        emit(c, {{"schema_version", 1},
                 {"curve_K", {{"ic", ic_json(icK)}, {"discriminant", dK.get_str()}}},
                 {"curve_Q", {{"ic", ic_json(icQ)}, {"discriminant", dQ.get_str()}}},
                 {"wp_equivalent", wp.equivalent},
                 {"u", wp.equivalent ? wp.u.get_str() : ""}});
    } else {
        *c.out << "curve over K: IC " << ic_str(icK) << ", discriminant "
               << dK.get_str() << "\n";
        *c.out << "curve over Q: IC " << ic_str(icQ) << ", discriminant "
               << dQ.get_str() << "\n";
        if (wp.equivalent)
            *c.out << "weighted-projective match with u = " << wp.u.get_str() << "\n";
        else
            *c.out << "no weighted-projective match\n";
    }
}

void cmd_humbert(Ctx& c, const std::string& r_str, const std::string& s_str) {
    mpq_class r, s;
    try {
        r = mpq_class(r_str);
        s = mpq_class(s_str);
        r.canonicalize();
        s.canonicalize();
    } catch (const std::exception&) {
        throw data::UnknownAsset("humbert needs rational r and s, e.g. 8 -2 or 3/4 1/2");
    }
    const auto H = curves::humbert_point(r, s);
    if (c.format == "json") {
        emit(c, {{"schema_version", 1},
                 {"r", H.r.get_str()},
                 {"s", H.s.get_str()},
                 {"ic", ic_json(H.ic)},
                 {"z_squared", H.z_squared.get_str()}});
    } else {
        *c.out << "IC " << ic_str(H.ic) << "\n"
               << "z^2 = " << H.z_squared.get_str() << "\n";
    }
}

void cmd_classnumber(Ctx& c, long D) {
    const unsigned h = core::class_number_imag_quad(D);
    if (c.format == "json")
        emit(c, {{"schema_version", 1}, {"D", D}, {"h", h}});
    else
        *c.out << "h(" << D << ") = " << h << "\n";
}

void cmd_sieve(Ctx& c, const std::string& form_ref, const std::string& sextic_ref) {
    const auto f = get_form(c, form_ref);
    const auto N = get_sextic(c, sextic_ref);
    // Odd-trace primes from the data: odd p, prime to disc, odd parity above.
    std::vector<long> odd_primes;
    for (long p : rational_primes(f)) {
        if (p == 2 ||
            mpz_divisible_ui_p(N.disc.get_mpz_t(), static_cast<unsigned long>(p)))
            continue;
        const auto split = quad::splitting(f.field, p);
        if (quad::rm_reduce_lambda2(f.eigenvalue(split.primes.at(0))) == 1)
            odd_primes.push_back(p);
    }
    long q0 = 1;
    {
        mpz_class m = -f.field.D;
        for (long p : core::prime_support(m)) {
            int v = 0;
            while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
                m /= p;
                ++v;
            }
            if (v % 2)
                q0 *= p;
        }
    }
    const auto R = fs::quad_subfield_sieve({-1, 2, -2, q0, -q0, 2 * q0, -2 * q0},
                                           odd_primes);
    const bool ok = R.survivors == std::vector<long>{q0};
    if (c.format == "json") {
        ordered_json elim = ordered_json::array();
        for (const auto& e : R.eliminated)
            elim.push_back({{"d", e.d},
                            {"fundamental", e.fund.get_str()},
                            {"witness", e.witness}});
        emit(c, {{"schema_version", 1},
                 {"odd_trace_primes", odd_primes},
                 {"survivors", R.survivors},
                 {"eliminations", elim},
                 {"expected", q0},
                 {"pass", ok}});
    } else {
        *c.out << "odd-trace primes:";
        for (long p : odd_primes)
            *c.out << " " << p;
        *c.out << "\nsurvivors:";
        for (long d : R.survivors)
            *c.out << " " << d;
        *c.out << "\n";
        for (const auto& e : R.eliminated)
            *c.out << "  d=" << e.d << " (disc " << e.fund << ") eliminated by p="
                   << e.witness << "\n";
        *c.out << (ok ? "pass" : "FAIL") << "\n";
    }
    c.exit_code = ok ? 0 : 1;
}

void cmd_count(Ctx& c, const std::string& curve_ref, const std::string& tag, int power) {
    const auto CK = get_curve_K(c, curve_ref);
    const auto fp = quad::parse_ideal_tag(quad::ImagQuadField(CK.D), tag);
    const auto R = curves::reduce_curve(CK, fp, power);
    const long n = curves::count_points(R);
    if (c.format == "json")
        emit(c, {{"schema_version", 1},
                 {"tag", fp.tag},
                 {"q", R.F->q()},
                 {"points", n}});
    else
        *c.out << n << "\n";
}

} // namespace

int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    Ctx ctx;
    ctx.out = &out;
    ctx.err = &err;

    CLI::App app{"Exact verification tools for a Bianchi-to-paramodular lift"};
    app.name("paralift");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Help for all subcommands");
    app.add_option("--format", ctx.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--data-dir", ctx.data_dir,
                   "Directory overriding the bundled data documents");
    app.add_option("--jobs", ctx.jobs,
                   "Worker cap; execution is serial and deterministic")
        ->check(CLI::NonNegativeNumber);

    // verify
    auto* verify = app.add_subcommand("verify", "Run the full verification report");
    auto v_bundle = std::make_shared<std::string>("builtin");
    auto v_form = std::make_shared<std::string>("builtin");
    auto v_curve = std::make_shared<std::string>("builtin");
    auto v_qcurve = std::make_shared<std::string>("builtin");
    auto v_sextic = std::make_shared<std::string>("builtin");
    auto v_T = std::make_shared<std::vector<long>>(std::vector<long>{3, 5, 7, 19, 29, 31});
    verify->add_option("--bundle", *v_bundle, "Asset bundle (builtin)");
    verify->add_option("--form", *v_form, "Newform document or builtin");
    verify->add_option("--curve", *v_curve, "Curve over K document or builtin");
    verify->add_option("--qcurve", *v_qcurve, "Curve over Q document or builtin");
    verify->add_option("--sextic", *v_sextic, "Sextic document or builtin");
    verify->add_option("--t", *v_T, "Rational primes for the comparison set")
        ->delimiter(',');
    verify->callback([&ctx, v_bundle, v_form, v_curve, v_qcurve, v_sextic, v_T] {
        if (*v_bundle != "builtin")
            throw data::UnknownAsset("the only bundle is \"builtin\"");
        cmd_verify(ctx, *v_form, *v_curve, *v_qcurve, *v_sextic, *v_T);
    });

    // euler
    auto* euler = app.add_subcommand("euler", "Euler factors from form and curve");
    auto e_form = std::make_shared<std::string>("builtin");
    auto e_curve = std::make_shared<std::string>("builtin");
    auto e_tags = std::make_shared<std::vector<std::string>>();
    auto e_all = std::make_shared<bool>(false);
    euler->add_option("--form", *e_form, "Newform document or builtin");
    euler->add_option("--curve", *e_curve, "Curve over K document or builtin");
    // allow_extra_args(false) stops bracket expansion, which would otherwise
    // split tag syntax like "[2, w+1]" into pieces.
    euler->add_option("--prime", *e_tags, "Prime ideal tag, repeatable")
        ->allow_extra_args(false);
    euler->add_flag("--all", *e_all, "Every prime in the eigenvalue table");
    euler->callback([&ctx, e_form, e_curve, e_tags, e_all] {
        cmd_euler(ctx, *e_form, *e_curve, *e_tags, *e_all);
    });

    // lift
    auto* liftc = app.add_subcommand("lift", "Spinor factors and Arakawa eigenvalues");
    auto l_form = std::make_shared<std::string>("builtin");
    auto l_weight = std::make_shared<int>(2);
    liftc->add_option("--form", *l_form, "Newform document or builtin");
    liftc->add_option("--weight", *l_weight, "Even weight")->check(CLI::PositiveNumber);
    liftc->callback([&ctx, l_form, l_weight] { cmd_lift(ctx, *l_form, *l_weight); });

    // invariants
    auto* inv = app.add_subcommand("invariants", "Igusa-Clebsch invariants and discriminants");
    auto i_curve = std::make_shared<std::string>("builtin");
    auto i_qcurve = std::make_shared<std::string>("builtin");
    inv->add_option("--curve", *i_curve, "Curve over K document or builtin");
    inv->add_option("--qcurve", *i_qcurve, "Curve over Q document or builtin");
    inv->callback([&ctx, i_curve, i_qcurve] { cmd_invariants(ctx, *i_curve, *i_qcurve); });

    // humbert
    auto* hum = app.add_subcommand("humbert", "Evaluate the Humbert parametrization at (r, s)");
    auto h_r = std::make_shared<std::string>();
    auto h_s = std::make_shared<std::string>();
    hum->add_option("r", *h_r, "Rational r")->required();
    hum->add_option("s", *h_s, "Rational s")->required();
    hum->callback([&ctx, h_r, h_s] { cmd_humbert(ctx, *h_r, *h_s); });

    // classnumber
    auto* cls = app.add_subcommand("classnumber", "Class number of an imaginary quadratic field");
    auto c_D = std::make_shared<long>(0);
    cls->add_option("D", *c_D, "Fundamental discriminant D < 0")->required();
    cls->callback([&ctx, c_D] { cmd_classnumber(ctx, *c_D); });

    // sieve
    auto* sie = app.add_subcommand("sieve", "Quadratic-subfield sieve from the bundled data");
    auto s_form = std::make_shared<std::string>("builtin");
    auto s_sextic = std::make_shared<std::string>("builtin");
    sie->add_option("--form", *s_form, "Newform document or builtin");
    sie->add_option("--sextic", *s_sextic, "Sextic document or builtin");
    sie->callback([&ctx, s_form, s_sextic] { cmd_sieve(ctx, *s_form, *s_sextic); });

    // count
    auto* cnt = app.add_subcommand("count", "Point count of the reduced curve at a prime");
    auto n_curve = std::make_shared<std::string>("builtin");
    auto n_tag = std::make_shared<std::string>();
    auto n_power = std::make_shared<int>(1);
    cnt->add_option("--curve", *n_curve, "Curve over K document or builtin");
    cnt->add_option("--prime", *n_tag, "Prime ideal tag")->required();
    cnt->add_option("--power", *n_power, "Residue-field extension degree")
        ->check(CLI::PositiveNumber);
    cnt->callback([&ctx, n_curve, n_tag, n_power] {
        cmd_count(ctx, *n_curve, *n_tag, *n_power);
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        err << app.help();
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return ctx.exit_code;
}

int run_command(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run_command(std::move(args), std::cout, std::cerr);
}

} // namespace paralift::cli
