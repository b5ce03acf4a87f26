#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "kummer.hpp"

namespace cyclicff {

using Rng = std::mt19937_64;

/// Uniform element of F_q (base = true) or F_{q^2}.
inline GF random_element(const FieldTower& t, Rng& rng, bool base = true) {
    std::uniform_int_distribution<std::uint64_t> d(0, (base ? t.q() : t.q2()) - 1);
    return t.from_code(d(rng));
}

inline GF random_nonzero(const FieldTower& t, Rng& rng, bool base = true) {
    std::uniform_int_distribution<std::uint64_t> d(1, (base ? t.q() : t.q2()) - 1);
    return t.from_code(d(rng));
}

/// Polynomial of degree at most `max_degree` (possibly zero).
inline PolyGF random_poly(const FieldTower& t, Rng& rng, int max_degree, bool base = true) {
    std::vector<GF> c;
    for (int k = 0; k <= max_degree; ++k) c.push_back(random_element(t, rng, base));
    return PolyGF(t.data(), std::move(c));
}

inline PolyGF random_nonzero_poly(const FieldTower& t, Rng& rng, int max_degree, bool base = true) {
    for (;;) {
        PolyGF f = random_poly(t, rng, max_degree, base);
        if (!f.is_zero()) return f;
    }
}

inline RatFunc random_nonzero_rf(const FieldTower& t, Rng& rng, int max_degree, bool base = true) {
    return rf_normalize(random_nonzero_poly(t, rng, max_degree, base), random_nonzero_poly(t, rng, max_degree, base));
}

/// (A, B) over F_q with A + xi^{-1} B != 0 and non-constant d.
inline ABPair random_ab(const FieldTower& t, Rng& rng, int max_degree = 2) {
    for (;;) {
        ABPair ab{random_poly(t, rng, max_degree), random_poly(t, rng, max_degree)};
        if (ab.A.is_zero() && ab.B.is_zero()) continue;
        const PolyGF den = ab.A + poly_const(t, t.xi().inverse()) * ab.B;
        if (den.is_zero()) continue;
        const RatFunc d = rf_normalize(ab.A + poly_const(t, t.xi()) * ab.B, den);
        if (d.num().degree() < 1 && d.den().degree() < 1) continue;
        return ab;
    }
}

/// A random validated construction; retries (A, B, u) draws that give a
/// reducible Kummer datum.
inline Construction random_construction(const FieldTower& t, Rng& rng, int max_degree = 2) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        const ABPair ab = random_ab(t, rng, max_degree);
        std::optional<RatFunc> u;
        if (t.ell() % 2 == 0) u = random_nonzero_rf(t, rng, 1);
        try {
            return build_extension(t, ab.A, ab.B, u);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotIrreducible) throw;
        }
    }
    fail(ErrorCode::SearchExhausted, "no irreducible Kummer datum sampled");
}

}  // namespace cyclicff
