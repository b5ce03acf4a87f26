#pragma once

#include <cctype>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "error.hpp"
#include "field_tower.hpp"
#include "kummer.hpp"
#include "ramification.hpp"
#include "rational_function.hpp"

namespace cyclicff {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Text grammar: terms c*x^k, x^k, c joined by + / -, whitespace ignored,
// integer coefficients reduced mod p. A rational function is "num / den".

namespace detail {

/// Integer coefficient map {degree -> coefficient} from the term grammar.
inline std::vector<BigInt> parse_integer_poly(const std::string& text, char var = 'x') {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) fail(ErrorCode::ParseError, "empty polynomial");
    std::vector<BigInt> coeffs;
    std::size_t i = 0;
    auto read_int = [&](BigInt& out) {
        const std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) return false;
        out = BigInt(s.substr(start, i - start));
        return true;
    };
    bool first = true;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = (s[i] == '-') ? -1 : 1;
            ++i;
        } else if (!first) {
            fail(ErrorCode::ParseError, "expected + or - in '" + text + "'");
        }
        first = false;
        BigInt c = 1;
        const bool has_coeff = read_int(c);
        std::size_t degree = 0;
        if (i < s.size() && s[i] == '*') {
            if (!has_coeff) fail(ErrorCode::ParseError, "dangling '*' in '" + text + "'");
            ++i;
            if (i >= s.size() || s[i] != var) fail(ErrorCode::ParseError, "expected variable after '*'");
        }
        if (i < s.size() && s[i] == var) {
            ++i;
            degree = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                BigInt e;
                if (!read_int(e)) fail(ErrorCode::ParseError, "missing exponent in '" + text + "'");
                degree = static_cast<std::size_t>(e);
            }
        } else if (!has_coeff) {
            fail(ErrorCode::ParseError, "unexpected character in '" + text + "'");
        }
        if (coeffs.size() <= degree) coeffs.resize(degree + 1, BigInt(0));
        coeffs[degree] += sign * c;
    }
    return coeffs;
}

inline std::string strip_parens(std::string s) {
    auto trim = [](std::string& t) {
        const auto b = t.find_first_not_of(" \t");
        const auto e = t.find_last_not_of(" \t");
        t = (b == std::string::npos) ? std::string() : t.substr(b, e - b + 1);
    };
    trim(s);
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool encloses = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] == '(') ++depth;
            if (s[i] == ')') --depth;
            if (depth == 0 && i + 1 < s.size()) {
                encloses = false;
                break;
            }
        }
        if (!encloses) break;
        s = s.substr(1, s.size() - 2);
        trim(s);
    }
    return s;
}

inline std::pair<std::string, std::optional<std::string>> split_fraction(const std::string& text) {
    int depth = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        if (text[i] == '/' && depth == 0) return {text.substr(0, i), text.substr(i + 1)};
    }
    return {text, std::nullopt};
}

}  // namespace detail

/// Polynomial over F_p ⊂ F_q from the term grammar.
inline PolyGF parse_poly(const FieldTower& tower, const std::string& text) {
    std::vector<GF> c;
    for (const BigInt& v : detail::parse_integer_poly(detail::strip_parens(text)))
        c.push_back(ring_traits<GF>::from_integer(tower.data(), v));
    return PolyGF(tower.data(), std::move(c));
}

inline RatFunc parse_rf(const FieldTower& tower, const std::string& text) {
    const auto [num, den] = detail::split_fraction(text);
    if (!den) return RatFunc(parse_poly(tower, num));
    return rf_normalize(parse_poly(tower, num), parse_poly(tower, *den));
}

/// Same grammar over the bare prime field F_p.
inline Poly<Zp> parse_poly_mod(std::uint64_t p, const std::string& text) {
    std::vector<Zp> c;
    for (const BigInt& v : detail::parse_integer_poly(detail::strip_parens(text))) c.emplace_back(p, v);
    return Poly<Zp>(p, std::move(c));
}

inline RationalFunction<Zp> parse_rf_mod(std::uint64_t p, const std::string& text) {
    const auto [num, den] = detail::split_fraction(text);
    if (!den) return RationalFunction<Zp>(parse_poly_mod(p, num));
    return RationalFunction<Zp>(parse_poly_mod(p, num), parse_poly_mod(p, *den));
}

// ---------------------------------------------------------------------------
// Formatting

/// Sum of terms from the highest degree down; `coeff` renders one coefficient.
template <class R>
std::string format_poly(const Poly<R>& f, const std::function<std::string(const R&)>& coeff,
                        const std::string& var = "x") {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        if (ring_traits<R>::is_zero(f.coeffs()[k])) continue;
        std::string c = coeff(f.coeffs()[k]);
        bool negative = false;
        if (!c.empty() && c.front() == '-' && c.find_first_of("+ /", 1) == std::string::npos) {
            negative = true;
            c = c.substr(1);
        }
        if (!first) os << (negative ? " - " : " + ");
        else if (negative) os << '-';
        first = false;
        const std::string power = (k == 0) ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (k == 0) {
            os << c;
        } else if (c == "1") {
            os << power;
        } else if (c.find_first_of(" /") != std::string::npos) {
            os << '(' << c << ")*" << power;
        } else {
            os << c << '*' << power;
        }
    }
    return os.str();
}

inline std::string format_poly(const FieldTower& tower, const PolyGF& f, const std::string& var = "x") {
    return format_poly<GF>(f, [&tower](const GF& c) { return format_gf(tower, c); }, var);
}

template <class R>
std::string format_fraction(const std::string& num, const std::string& den, bool den_is_one) {
    if (den_is_one) return num;
    auto wrap = [](const std::string& s) { return s.find(' ') != std::string::npos ? "(" + s + ")" : s; };
    return wrap(num) + "/" + wrap(den);
}

inline std::string format_rf(const FieldTower& tower, const RatFunc& f) {
    return format_fraction<GF>(format_poly(tower, f.num()), format_poly(tower, f.den()), f.den().is_one());
}

inline std::string format_rf_mod(const RationalFunction<Zp>& f) {
    auto zp = [](const Zp& c) { return std::to_string(c.value()); };
    return format_fraction<Zp>(format_poly<Zp>(f.num(), zp), format_poly<Zp>(f.den(), zp), f.den().is_one());
}

/// P^ell over F_q(x) as "X^3 + X + 1/(x^2 + x + 1)".
inline std::string format_generic(const FieldTower& tower, const Poly<RatFunc>& P) {
    return format_poly<RatFunc>(P, [&tower](const RatFunc& c) { return format_rf(tower, c); }, "X");
}

inline std::string format_place(const FieldTower& tower, const Place& p) {
    return p.is_infinity() ? "infinity" : format_poly(tower, p.carrier());
}

/// One-line description of the representation, printed atop text output.
inline std::string tower_header(const FieldTower& tower) {
    std::vector<GF> ext;
    for (std::uint32_t c : tower.ext_modulus()) ext.emplace_back(tower.data(), c);
    std::ostringstream os;
    os << "# F_q = F_" << tower.p();
    if (tower.n() > 1) {
        std::vector<GF> base;
        for (std::uint64_t c : tower.base_modulus()) base.emplace_back(tower.data(), static_cast<std::uint32_t>(c));
        os << "[t]/(" << format_poly(tower, PolyGF(tower.data(), base), "t") << ")";
    }
    os << ", F_q2 = F_q[s]/(" << format_poly(tower, PolyGF(tower.data(), ext), "s") << ")"
       << ", xi = " << format_gf(tower, tower.xi()) << ", ell = " << tower.ell();
    return os.str();
}

// ---------------------------------------------------------------------------
// JSON

inline json to_json(GF c) { return json::array({c.c0(), c.c1()}); }

inline json to_json(const PolyGF& f) {
    json out = json::array();
    for (GF c : f.coeffs()) out.push_back(to_json(c));
    return out;
}

inline json to_json(const RatFunc& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

inline json tower_to_json(const FieldTower& t) {
    json ext = json::array();
    for (std::uint32_t c : t.ext_modulus()) ext.push_back(c);
    return {{"p", t.p()}, {"n", t.n()}, {"ell", t.ell()}, {"base_modulus", t.base_modulus()},
            {"ext_modulus", ext}, {"xi", to_json(t.xi())}};
}

inline GF gf_from_json(const FieldTower& t, const json& j) {
    if (!j.is_array() || j.size() != 2) fail(ErrorCode::ParseError, "F_q2 element must be [c0, c1]");
    return t.element(j[0].get<std::uint64_t>(), j[1].get<std::uint64_t>());
}

inline PolyGF poly_from_json(const FieldTower& t, const json& j) {
    if (!j.is_array()) fail(ErrorCode::ParseError, "polynomial must be an array");
    std::vector<GF> c;
    for (const auto& e : j) c.push_back(gf_from_json(t, e));
    return PolyGF(t.data(), std::move(c));
}

inline RatFunc rf_from_json(const FieldTower& t, const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        fail(ErrorCode::ParseError, "rational function must be {num, den}");
    return rf_normalize(poly_from_json(t, j.at("num")), poly_from_json(t, j.at("den")));
}

/// Rebuilds the tower from (p, n, ell) and checks the stored representation.
inline FieldTower tower_from_json(const json& j) {
    try {
        const FieldTower t = build_field_tower(j.at("p").get<std::uint64_t>(), j.at("n").get<unsigned>(),
                                               j.at("ell").get<std::uint64_t>());
        if (tower_to_json(t) != j) fail(ErrorCode::ParseError, "tower representation does not match (p, n, ell)");
        return t;
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("malformed tower: ") + e.what());
    }
}

inline json spec_to_json(const ExtensionSpec& spec) {
    const auto P = build_P(spec.ell(), spec.u, spec.alpha).poly;
    json coeffs = json::array();
    for (const RatFunc& c : P.coeffs()) coeffs.push_back(to_json(c));
    json out = {{"tower", tower_to_json(spec.tower)},
                {"a", to_json(spec.a)},
                {"u", to_json(spec.u)},
                {"alpha", to_json(spec.alpha)},
                {"eta", to_json(spec.eta)},
                {"u_defaulted", spec.u_defaulted},
                {"P", coeffs},
                {"P_text", format_generic(spec.tower, P)}};
    if (spec.provenance) out["provenance"] = {{"A", to_json(spec.provenance->A)}, {"B", to_json(spec.provenance->B)}};
    return out;
}

/// Parses and fully re-validates an ExtensionSpec.
inline ExtensionSpec spec_from_json(const json& j) {
    try {
        ExtensionSpec s;
        s.tower = tower_from_json(j.at("tower"));
        s.a = rf_from_json(s.tower, j.at("a"));
        s.u = rf_from_json(s.tower, j.at("u"));
        s.alpha = rf_from_json(s.tower, j.at("alpha"));
        s.eta = j.contains("eta") ? gf_from_json(s.tower, j.at("eta")) : s.tower.one();
        s.u_defaulted = j.value("u_defaulted", false);
        if (j.contains("provenance")) {
            s.provenance = ABPair{poly_from_json(s.tower, j.at("provenance").at("A")),
                                  poly_from_json(s.tower, j.at("provenance").at("B"))};
        }
        validate_spec(s);
        if (j.contains("P")) {
            const auto P = build_P(s.ell(), s.u, s.alpha).poly;
            json coeffs = json::array();
            for (const RatFunc& c : P.coeffs()) coeffs.push_back(to_json(c));
            if (coeffs != j.at("P")) fail(ErrorCode::ParseError, "stored P disagrees with (u, alpha)");
        }
        return s;
    } catch (const json::exception& e) {
        fail(ErrorCode::ParseError, std::string("malformed spec: ") + e.what());
    }
}

inline json ramification_to_json(const FieldTower& tower, const std::vector<RamificationRecord>& table) {
    json out = json::array();
    for (const auto& r : table) {
        out.push_back({{"place", format_place(tower, r.place)},
                       {"degree", r.degree},
                       {"v_alpha", r.v_alpha},
                       {"v_u", r.v_u},
                       {"case", std::string(case_name(r.case_tag))},
                       {"e", r.e}});
    }
    return out;
}

}  // namespace cyclicff
