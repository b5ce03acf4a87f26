#pragma once

#include <chrono>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "generic_poly.hpp"
#include "kummer.hpp"
#include "ramification.hpp"
#include "sampling.hpp"

namespace cyclicff {

/// Listed generic polynomials: coefficient of u^s X^{ell-2s} for s = 1..iota.
struct GoldenEntry {
    unsigned ell;
    std::vector<long> coeffs;
};

inline const std::vector<GoldenEntry>& golden_vectors() {
    static const std::vector<GoldenEntry> table = {
        {3, {-3}},
        {5, {-5, 5}},
        {7, {-7, 14, -7}},
        {9, {-9, 27, -30, 9}},
        {11, {-11, 44, -77, 55, -11}},
        {13, {-13, 65, -156, 182, -91, 13}},
        {2, {-2}},
        {4, {-4, 2}},
        {6, {-6, 9, -2}},
        {8, {-8, 20, -16, 2}},
    };
    return table;
}

/// X^ell + sum_s coeffs[s-1] u^s X^{ell-2s} - alpha over Z[u, alpha].
inline SymbolicPoly golden_poly(const GoldenEntry& g) {
    const auto ctx = symbolic_context();
    std::vector<IntPoly> c(g.ell + 1, IntPoly::integer(ctx, 0));
    c[g.ell] = IntPoly::integer(ctx, 1);
    for (std::size_t s = 1; s <= g.coeffs.size(); ++s)
        c[g.ell - 2 * s] = c[g.ell - 2 * s] + IntPoly::integer(ctx, g.coeffs[s - 1]) * symbolic_u().pow(s);
    c[0] = c[0] - symbolic_alpha();
    return SymbolicPoly(ctx, std::move(c));
}

/// Every ordered sequence of factors >= 2 with product n, including (n).
inline std::vector<std::vector<unsigned>> ordered_factorizations(unsigned n) {
    std::vector<std::vector<unsigned>> out;
    if (n < 2) return {{n}};
    for (unsigned d = 2; d <= n; ++d) {
        if (n % d != 0) continue;
        if (d == n) {
            out.push_back({n});
            continue;
        }
        for (auto rest : ordered_factorizations(n / d)) {
            rest.insert(rest.begin(), d);
            out.push_back(std::move(rest));
        }
    }
    return out;
}

/// f(e) in the Kummer model for f with F_{q^2}(x) coefficients.
inline ModelElement eval_in_model(const KummerModel& model, const Poly<RatFunc>& f, const ModelElement& e) {
    ModelElement acc = model.zero();
    for (std::size_t k = f.coeffs().size(); k-- > 0;) acc = acc * e + model.embed(f.coeffs()[k]);
    return acc;
}

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    unsigned samples = 5;
    std::uint64_t seed = 1;
};

namespace detail {

inline PropertyResult run_property(const std::string& name, const std::function<std::string()>& body) {
    PropertyResult r{name, true, ""};
    try {
        r.detail = body();
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = e.what();
    }
    if (r.passed && !r.detail.empty() && r.detail.rfind("FAIL", 0) == 0) r.passed = false;
    return r;
}

inline std::string check(bool ok, const std::string& what) { return ok ? std::string() : "FAIL: " + what; }

}  // namespace detail

/// Oracle suite for one tower; one result per property.
inline std::vector<PropertyResult> verify_suite(const FieldTower& t, const VerifyOptions& opt = {}) {
    using detail::check;
    using detail::run_property;
    const unsigned ell = static_cast<unsigned>(t.ell());
    Rng rng(opt.seed);
    std::vector<PropertyResult> out;

    out.push_back(run_property("tower_invariants", [&] {
        const GF xi = t.xi();
        for (std::uint64_t d = 1; d < ell; ++d)
            if (ell % d == 0 && xi.pow(d).is_one()) return check(false, "xi has order below ell");
        const GF tr = xi + xi.inverse();
        const bool ok = xi.pow(ell).is_one() && !xi.in_base_field() && tr.in_base_field() &&
                        (xi * xi - tr * xi + t.one()).is_zero() && tr != t.from_int(2) && tr != t.from_int(-2) &&
                        sigma(xi) == xi.inverse();
        return check(ok, "xi invariants");
    }));

    out.push_back(run_property("sigma_automorphism", [&] {
        for (unsigned i = 0; i < 200 * opt.samples; ++i) {
            const GF a = random_element(t, rng, false), b = random_element(t, rng, false);
            if (sigma(a + b) != sigma(a) + sigma(b) || sigma(a * b) != sigma(a) * sigma(b) || sigma(sigma(a)) != a)
                return check(false, "sigma is not an involutive automorphism");
            if (a.in_base_field() != (sigma(a) == a)) return check(false, "fixed field of sigma");
        }
        return std::string();
    }));

    out.push_back(run_property("unit_circle", [&] {
        const auto u = unit_circle(t);
        bool ok = u.size() == t.q() + 1;
        for (GF eta : u) ok = ok && (eta * sigma(eta)).is_one();
        return check(ok, "|U| = q+1 with norm one");
    }));

    out.push_back(run_property("golden_vectors", [&] {
        for (const auto& g : golden_vectors())
            if (!(build_P(g.ell, symbolic_u(), symbolic_alpha()).poly == golden_poly(g)))
                return check(false, "P^" + std::to_string(g.ell));
        return std::string();
    }));

    out.push_back(run_property("closed_forms", [&] {
        for (unsigned r = 0; r < 2; ++r) {
            const CoeffTable c = coeff_table(100 + r);
            for (unsigned j = 1; j <= 50; ++j) {
                const BigInt sign = (j % 2) ? -1 : 1;
                if (c.at(1, j) != -BigInt(2 * j + r)) return check(false, "c[1][j]");
                if (c.at(j, j) != sign * (r ? BigInt(2 * j + 1) : BigInt(2))) return check(false, "c[j][j]");
            }
        }
        return std::string();
    }));

    out.push_back(run_property("dickson_equivalence", [&] {
        if (!(build_Q(ell, symbolic_u()) == dickson_oracle(ell))) return check(false, "symbolic Q != D");
        for (unsigned i = 0; i < opt.samples; ++i) {
            const GF u = random_element(t, rng);
            const PolyGF x = poly_x(t);
            PolyGF prev = poly_const(t, t.from_int(2)), cur = x;
            for (unsigned k = 2; k <= ell; ++k) {
                PolyGF next = x * cur - poly_const(t, u) * prev;
                prev = cur;
                cur = next;
            }
            if (!(build_Q(ell, u) == cur)) return check(false, "Q != D over F_q");
        }
        return std::string();
    }));

    out.push_back(run_property("bivariate_identity", [&] {
        return check(bivariate_identity_check(ell) && bivariate_identity_check(ell, t.p()),
                     "P(w+v) at u = wv, alpha = w^ell + v^ell");
    }));

    out.push_back(run_property("composition_chain", [&] {
        const auto P = build_P(ell, symbolic_u(), symbolic_alpha()).poly;
        for (const auto& f : ordered_factorizations(ell))
            if (!(compose_chain(ell, f, symbolic_u(), symbolic_alpha()) == P)) return check(false, "chain differs");
        return std::string();
    }));

    if (ell % 2 == 0) {
        out.push_back(run_property("even_halving", [&] {
            if (!halve_even(ell, symbolic_u(), symbolic_alpha()).identity_holds) return check(false, "symbolic");
            for (unsigned i = 0; i < opt.samples; ++i) {
                const RatFunc u = random_nonzero_rf(t, rng, 2), alpha = random_nonzero_rf(t, rng, 2);
                if (!halve_even(ell, u, alpha).identity_holds) return check(false, "over F_q(x)");
            }
            return std::string();
        }));
    }

    std::vector<Construction> specs;
    out.push_back(run_property("construction", [&] {
        for (unsigned i = 0; i < opt.samples; ++i) specs.push_back(random_construction(t, rng));
        for (const auto& c : specs) validate_spec(c.spec);
        return std::string();
    }));

    out.push_back(run_property("model_roots", [&] {
        for (const auto& c : specs) {
            const KummerModel model = model_of(c.spec);
            const auto P = c.generic.poly;
            const auto roots = conjugate_roots_in_model(c.spec);
            for (std::size_t i = 0; i < roots.size(); ++i) {
                if (!eval_in_model(model, P, roots[i]).is_zero()) return check(false, "conjugate not annihilated");
                for (std::size_t k = 0; k < i; ++k)
                    if (roots[i] == roots[k]) return check(false, "conjugates coincide");
            }
            if (!(conjugate_product(c.spec) == P)) return check(false, "product of conjugates != P");
            if (!(minimal_poly_in_model(model, roots[0]) == P)) return check(false, "minimal polynomial != P");
        }
        return std::string();
    }));

    out.push_back(run_property("norm_one_and_hilbert90", [&] {
        for (unsigned i = 0; i < 20 * opt.samples; ++i) {
            const ABPair ab = random_ab(t, rng);
            const FromAB f = from_AB(t, ab.A, ab.B);
            if (!(f.d * sigma(f.d)).is_one() || !in_base_function_field(f.alpha)) return check(false, "from_AB");
            const RatFunc theta = hilbert90(t, f.d);
            if (theta.is_zero() || !(theta / sigma(theta) == f.d)) return check(false, "hilbert90");
        }
        return std::string();
    }));

    out.push_back(run_property("lemma2_norm_in_base", [&] {
        for (const auto& c : specs) {
            const KummerModel model = model_of(c.spec);
            for (unsigned j = 1; j < ell; ++j) {
                if (std::gcd(j, ell) != 1) continue;
                const ModelElement z = model.monomial(random_nonzero_rf(t, rng, 2, false), j);
                if (!(z * model.sigma(z)).in_base()) return check(false, "z sigma(z) outside F_q(x)");
            }
        }
        return std::string();
    }));

    out.push_back(run_property("classifier", [&] {
        for (const auto& c : specs) {
            const auto self = isomorphic(c.spec, c.spec);
            if (!self || self->j != 1 || !self->c.pow(ell).is_one()) return check(false, "reflexivity");
            unsigned j = 0;
            do {
                j = std::uniform_int_distribution<unsigned>(1, ell - 1)(rng);
            } while (std::gcd(j, ell) != 1);
            const RatFunc cc = random_nonzero_rf(t, rng, 1, false);
            const RatFunc a2 = cc.pow(ell) * c.spec.a.pow(j);
            const RatFunc u2 = (cc * sigma(cc)) * c.spec.u.pow(j);
            const auto s2 = build_extension_from_a(t, a2, u2).spec;
            const auto w = isomorphic(c.spec, s2);
            if (!w || !(w->c.pow(ell) * c.spec.a.pow(w->j) == s2.a)) return check(false, "transformed pair");
        }
        return std::string();
    }));

    out.push_back(run_property("ramification", [&] {
        std::ostringstream note;
        unsigned ramified = 0;
        for (const auto& c : specs) {
            for (const auto& r : ramification_table(c.spec)) {
                if (ell % r.e != 0) return check(false, "e does not divide ell");
                ramified += r.ramified();
            }
        }
        note << ramified << " ramified places";
        return note.str();
    }));

    out.push_back(run_property("normalized_representatives", [&] {
        unsigned checked = 0;
        for (unsigned i = 0; i < opt.samples; ++i) {
            const ABPair ab = random_ab(t, rng);
            const RatFunc a = sigma(from_AB(t, ab.A, ab.B).d);
            if (!kummer_irreducible(t, a, ell)) continue;
            const RatFunc a_norm = normalize_rep(t, a, ell);
            if (in_base_function_field(a_norm)) continue;
            const auto spec = build_extension_from_a(t, a_norm, rf_one(t)).spec;
            for (const auto& r : ramification_table(spec)) {
                if (r.place.is_infinity() && r.v_alpha < 0) return check(false, "pole of alpha at infinity");
                if (r.ramified() && !r.place.is_infinity() &&
                    (r.v_alpha < -static_cast<int>(ell - 1) || r.v_alpha > -1))
                    return check(false, "v(alpha) outside [-(ell-1), -1]");
            }
            ++checked;
        }
        return std::to_string(checked) + " representatives";
    }));

    return out;
}

}  // namespace cyclicff
