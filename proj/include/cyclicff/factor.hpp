#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "field_tower.hpp"
#include "poly.hpp"
#include "rational_function.hpp"

namespace cyclicff {

/// Which constant field a factorization is taken over.
enum class Over { Fq, Fq2 };

struct Factorization {
    GF leading;
    std::vector<std::pair<PolyGF, int>> factors;  // monic irreducible, multiplicity

    PolyGF expand() const {
        const auto* t = leading.tower();
        PolyGF r = PolyGF::constant(t, leading);
        for (const auto& [f, m] : factors) r *= pow(f, static_cast<unsigned>(m));
        return r;
    }
};

namespace detail {

inline std::uint64_t field_size(const TowerData* t, Over over) { return over == Over::Fq ? t->q : t->q2; }

// p-th root of a polynomial whose exponents are all multiples of p.
inline PolyGF poly_pth_root(const PolyGF& f) {
    const auto* t = f.context();
    const BigInt root_exp = BigInt(t->q2 / t->p);  // inverse of Frobenius x -> x^p on F_{q^2}
    std::vector<GF> out;
    for (std::size_t i = 0; i < f.coeffs().size(); i += t->p) out.push_back(f.coeffs()[i].pow(root_exp));
    return PolyGF(t, std::move(out));
}

inline void squarefree(const PolyGF& f, int mult, std::vector<std::pair<PolyGF, int>>& out) {
    if (f.degree() < 1) return;
    const auto* t = f.context();
    const PolyGF df = derivative(f);
    if (df.is_zero()) {
        squarefree(poly_pth_root(f), mult * static_cast<int>(t->p), out);
        return;
    }
    PolyGF c = gcd(f, df);
    PolyGF w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        const PolyGF y = gcd(w, c);
        const PolyGF fac = w / y;
        if (fac.degree() > 0) out.emplace_back(make_monic(fac), i * mult);
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) squarefree(poly_pth_root(c), mult * static_cast<int>(t->p), out);
}

inline std::vector<std::pair<PolyGF, int>> distinct_degree(PolyGF f, Over over) {
    const auto* t = f.context();
    const BigInt Q = field_size(t, over);
    std::vector<std::pair<PolyGF, int>> out;
    const PolyGF x = PolyGF::variable(t);
    PolyGF h = x;
    for (int i = 1; f.degree() >= 2 * i; ++i) {
        h = pow_mod(h, Q, f);
        const PolyGF g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(make_monic(f), f.degree());
    return out;
}

inline PolyGF random_poly(const TowerData* t, Over over, int below_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> dist(0, field_size(t, over) - 1);
    std::vector<GF> c;
    for (int i = 0; i < below_degree; ++i) {
        std::uint64_t code = dist(rng);
        if (over == Over::Fq) code %= t->q;  // subfield: c1 = 0
        c.emplace_back(t, static_cast<std::uint32_t>(code));
    }
    return PolyGF(t, std::move(c));
}

// Cantor-Zassenhaus splitting of a product of distinct irreducibles of degree d.
inline void equal_degree(const PolyGF& g, int d, Over over, std::mt19937_64& rng, std::vector<PolyGF>& out) {
    if (g.degree() == d) {
        out.push_back(make_monic(g));
        return;
    }
    const auto* t = g.context();
    const std::uint64_t Q = field_size(t, over);
    for (;;) {
        const PolyGF a = random_poly(t, over, g.degree(), rng);
        if (a.degree() < 1) continue;
        PolyGF b;
        if (t->p == 2) {
            // trace map a + a^2 + ... + a^{2^{k d - 1}} with Q = 2^k
            unsigned k = 0;
            for (std::uint64_t v = Q; v > 1; v >>= 1) ++k;
            PolyGF term = a % g;
            b = term;
            for (unsigned i = 1; i < k * static_cast<unsigned>(d); ++i) {
                term = (term * term) % g;
                b += term;
            }
        } else {
            BigInt e = 1;
            for (int i = 0; i < d; ++i) e *= Q;
            e = (e - 1) / 2;
            b = pow_mod(a, e, g) - PolyGF::one(t);
        }
        if (b.is_zero()) continue;
        const PolyGF h = gcd(g, b);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, over, rng, out);
            equal_degree(g / h, d, over, rng, out);
            return;
        }
    }
}

inline std::uint64_t seed_from(const PolyGF& f, Over over) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xffu;
            h *= 1099511628211ull;
        }
    };
    mix(over == Over::Fq ? 1 : 2);
    for (GF c : f.coeffs()) mix(c.code());
    return h;
}

}  // namespace detail

/// Complete factorization into monic irreducibles over F_q or F_{q^2}.
/// Factors are sorted by degree, then by ascending coefficient tuple.
inline Factorization factorize(const PolyGF& f, Over over) {
    if (f.is_zero()) fail(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");
    if (over == Over::Fq && !has_base_coefficients(f))
        fail(ErrorCode::InvariantViolation, "polynomial is not defined over F_q");
    Factorization out;
    out.leading = f.leading();
    const PolyGF monic = make_monic(f);
    std::mt19937_64 rng(detail::seed_from(monic, over));

    std::vector<std::pair<PolyGF, int>> sqf;
    detail::squarefree(monic, 1, sqf);
    for (const auto& [part, mult] : sqf) {
        for (const auto& [block, d] : detail::distinct_degree(part, over)) {
            std::vector<PolyGF> irreducibles;
            detail::equal_degree(block, d, over, rng, irreducibles);
            for (auto& g : irreducibles) out.factors.emplace_back(std::move(g), mult);
        }
    }
    // merge repeated factors (the p-th root recursion can revisit a factor)
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    std::vector<std::pair<PolyGF, int>> merged;
    for (auto& fm : out.factors) {
        if (!merged.empty() && merged.back().first == fm.first) merged.back().second += fm.second;
        else merged.push_back(std::move(fm));
    }
    out.factors = std::move(merged);
    return out;
}

inline bool is_irreducible(const PolyGF& f, Over over) {
    if (f.degree() < 1) return false;
    const Factorization fz = factorize(f, over);
    return fz.factors.size() == 1 && fz.factors[0].second == 1;
}

}  // namespace cyclicff
