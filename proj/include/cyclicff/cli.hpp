#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "generic_poly.hpp"
#include "io.hpp"
#include "kummer.hpp"
#include "ramification.hpp"
#include "verify.hpp"

namespace cyclicff {

namespace detail {

inline json bigint_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, path + ": " + e.what());
    }
}

inline std::uint64_t checked_prime(std::uint64_t p) {
    if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    return p;
}

struct Options {
    unsigned ell = 0;
    std::optional<std::uint64_t> mod;
    std::optional<std::string> u_text, alpha_text;
    std::optional<std::uint64_t> field;
    std::uint64_t p = 0;
    unsigned n = 1;
    std::string A, B;
    std::optional<std::string> u_rf;
    std::string out_file;
    std::string spec1, spec2, spec;
    unsigned samples = 5;
    std::uint64_t seed = 1;
    bool json_out = false;
};

inline int cmd_table(const Options& o, std::ostream& out) {
    const CoeffTable t = coeff_table(o.ell);
    const std::uint64_t m = o.mod ? checked_prime(*o.mod) : 0;
    auto entry = [&](unsigned s, unsigned j) { return m ? BigInt(reduce_mod(t.at(s, j), m)) : t.at(s, j); };
    if (o.json_out) {
        json rows = json::array();
        for (unsigned s = 0; s <= t.iota; ++s) {
            json row = json::array();
            for (unsigned j = 0; j <= t.iota; ++j) row.push_back(bigint_json(entry(s, j)));
            rows.push_back(row);
        }
        json j = {{"ell", t.ell}, {"r", t.r}, {"iota", t.iota}, {"c", rows}};
        if (o.mod) j["mod"] = *o.mod;
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "# c[s][j], ell = " << t.ell << ", r = " << t.r << ", iota = " << t.iota;
    if (m) out << ", mod " << m;
    out << '\n';
    for (unsigned j = 0; j <= t.iota; ++j) {
        out << "j=" << j << ':';
        for (unsigned s = 0; s <= j; ++s) out << ' ' << entry(s, j);
        out << '\n';
    }
    return 0;
}

inline int cmd_poly(const Options& o, std::ostream& out) {
    if (!o.field) {
        const std::string text = format_symbolic(build_P(o.ell, symbolic_u(), symbolic_alpha()).poly);
        if (o.json_out) out << json{{"ell", o.ell}, {"P", text}}.dump(2) << '\n';
        else out << text << '\n';
        return 0;
    }
    const std::uint64_t p = checked_prime(*o.field);
    const auto u = parse_rf_mod(p, *o.u_text);
    const auto alpha = parse_rf_mod(p, *o.alpha_text);
    const auto P = build_P(o.ell, u, alpha).poly;
    const std::string text = format_poly<RationalFunction<Zp>>(P, format_rf_mod, "X");
    if (o.json_out) {
        json coeffs = json::array();
        for (const auto& c : P.coeffs()) coeffs.push_back(format_rf_mod(c));
        out << json{{"ell", o.ell}, {"field", p}, {"u", format_rf_mod(u)}, {"alpha", format_rf_mod(alpha)},
                    {"P", text}, {"coefficients", coeffs}}
                   .dump(2)
            << '\n';
    } else {
        out << text << '\n';
    }
    return 0;
}

inline void print_spec(const ExtensionSpec& s, std::ostream& out) {
    out << tower_header(s.tower) << '\n';
    out << "a = " << format_rf(s.tower, s.a) << '\n';
    out << "u = " << format_rf(s.tower, s.u) << (s.u_defaulted ? "  (default)" : "") << '\n';
    out << "alpha = " << format_rf(s.tower, s.alpha) << '\n';
    out << "eta = " << format_gf(s.tower, s.eta) << '\n';
    out << "P = " << format_generic(s.tower, build_P(s.ell(), s.u, s.alpha).poly) << '\n';
}

inline int cmd_construct(const Options& o, std::ostream& out) {
    const FieldTower t = build_field_tower(checked_prime(o.p), o.n, o.ell);
    std::optional<RatFunc> u;
    if (o.u_rf) u = parse_rf(t, *o.u_rf);
    const Construction c = build_extension(t, parse_poly(t, o.A), parse_poly(t, o.B), u);
    const json j = spec_to_json(c.spec);
    if (!o.out_file.empty()) {
        std::ofstream f(o.out_file);
        if (!f) fail(ErrorCode::ParseError, "cannot write " + o.out_file);
        f << j.dump(2) << '\n';
    }
    if (o.json_out) out << j.dump(2) << '\n';
    else print_spec(c.spec, out);
    return 0;
}

inline int cmd_classify(const Options& o, std::ostream& out) {
    const ExtensionSpec s1 = spec_from_json(read_json_file(o.spec1));
    const ExtensionSpec s2 = spec_from_json(read_json_file(o.spec2));
    const auto w = isomorphic(s1, s2);
    if (o.json_out) {
        json j = {{"isomorphic", w.has_value()}, {"j", nullptr}, {"witness", nullptr}};
        if (w) {
            j["j"] = w->j;
            j["witness"] = to_json(w->c);
        }
        out << j.dump(2) << '\n';
    } else {
        out << tower_header(s1.tower) << '\n';
        if (w) out << "isomorphic: yes, j = " << w->j << ", c = " << format_rf(s1.tower, w->c) << '\n';
        else out << "isomorphic: no\n";
    }
    return 0;
}

inline int cmd_ramify(const Options& o, std::ostream& out) {
    const ExtensionSpec s = spec_from_json(read_json_file(o.spec));
    const auto table = ramification_table(s);
    if (o.json_out) {
        out << ramification_to_json(s.tower, table).dump(2) << '\n';
        return 0;
    }
    out << tower_header(s.tower) << '\n';
    out << "# place | degree | v(alpha) | v(u) | case | e\n";
    for (const auto& r : table) {
        out << format_place(s.tower, r.place) << " | " << r.degree << " | " << r.v_alpha << " | " << r.v_u << " | "
            << case_name(r.case_tag) << " | " << r.e << (r.ramified() ? "  ramified" : "") << '\n';
    }
    return 0;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    const FieldTower t = build_field_tower(checked_prime(o.p), o.n, o.ell);
    const auto results = verify_suite(t, VerifyOptions{o.samples, o.seed});
    bool all = true;
    json j = json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        j.push_back({{"property", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    if (o.json_out) {
        out << json{{"tower", tower_to_json(t)}, {"passed", all}, {"properties", j}}.dump(2) << '\n';
    } else {
        out << tower_header(t) << '\n';
        for (const auto& r : results)
            out << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : "  (" + r.detail + ")") << '\n';
        out << (all ? "all properties pass" : "some properties FAILED") << '\n';
    }
    return all ? 0 : 1;
}

}  // namespace detail

/// Runs one command line. Exit status: 0 success, 1 domain error or failed
/// verification, 2 usage error.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    detail::Options o;
    CLI::App app{"Cyclic extensions of F_q(x) for q = -1 mod ell"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    auto* table = app.add_subcommand("table", "coefficient table c[s][j]");
    table->add_option("--ell", o.ell)->required()->check(CLI::Range(1u, 100000u));
    table->add_option("--mod", o.mod, "reduce entries mod a prime");
    table->add_flag("--json", o.json_out);

    auto* poly = app.add_subcommand("poly", "the generic polynomial P^ell_{u,alpha}");
    poly->add_option("--ell", o.ell)->required()->check(CLI::Range(1u, 100000u));
    auto* u_opt = poly->add_option("--u", o.u_text, "u over F_p(x)");
    auto* a_opt = poly->add_option("--alpha", o.alpha_text, "alpha over F_p(x)");
    auto* f_opt = poly->add_option("--field", o.field, "prime p of the coefficient field F_p(x)");
    u_opt->needs(a_opt, f_opt);
    a_opt->needs(u_opt, f_opt);
    f_opt->needs(u_opt, a_opt);
    poly->add_flag("--json", o.json_out);

    auto add_tower = [&o](CLI::App* sub) {
        sub->add_option("--p", o.p)->required();
        sub->add_option("--n", o.n)->capture_default_str();
        sub->add_option("--ell", o.ell)->required();
        sub->add_flag("--json", o.json_out);
    };

    auto* construct = app.add_subcommand("construct", "build a cyclic extension from (A, B)");
    add_tower(construct);
    construct->add_option("--A", o.A)->required();
    construct->add_option("--B", o.B)->required();
    construct->add_option("--u", o.u_rf, "u over F_q(x), even ell only");
    construct->add_option("--out", o.out_file, "also write the JSON spec to this file");

    auto* classify = app.add_subcommand("classify", "decide whether two specs give the same extension");
    classify->add_option("--spec1", o.spec1)->required()->check(CLI::ExistingFile);
    classify->add_option("--spec2", o.spec2)->required()->check(CLI::ExistingFile);
    classify->add_flag("--json", o.json_out);

    auto* ramify = app.add_subcommand("ramify", "ramification table of a spec");
    ramify->add_option("--spec", o.spec)->required()->check(CLI::ExistingFile);
    ramify->add_flag("--json", o.json_out);

    auto* verify = app.add_subcommand("verify", "run the oracle suite on one tower");
    add_tower(verify);
    verify->add_option("--samples", o.samples)->capture_default_str();
    verify->add_option("--seed", o.seed)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*table) return detail::cmd_table(o, out);
        if (*poly) return detail::cmd_poly(o, out);
        if (*construct) return detail::cmd_construct(o, out);
        if (*classify) return detail::cmd_classify(o, out);
        if (*ramify) return detail::cmd_ramify(o, out);
        if (*verify) return detail::cmd_verify(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"cyclicff"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cyclicff
