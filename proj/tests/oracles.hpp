// Independent reference computations used only by the tests.
#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include <cyclicff/factor.hpp>
#include <cyclicff/generic_poly.hpp>
#include <cyclicff/kummer.hpp>
#include <cyclicff/place.hpp>

namespace oracle {

using namespace cyclicff;

// ---- F_q and F_{q^2} by schoolbook polynomial arithmetic over F_p ----

struct SlowField {
    std::uint64_t p;
    std::vector<std::uint64_t> base;  // monic, ascending
    std::uint64_t q;
    std::array<std::uint64_t, 3> ext;  // F_q codes, ascending

    explicit SlowField(const FieldTower& t)
        : p(t.p()), base(t.base_modulus()), q(t.q()), ext{t.ext_modulus()[0], t.ext_modulus()[1], t.ext_modulus()[2]} {}

    std::vector<std::uint64_t> digits(std::uint64_t c) const {
        std::vector<std::uint64_t> d(base.size() - 1, 0);
        for (auto& x : d) {
            x = c % p;
            c /= p;
        }
        return d;
    }
    std::uint64_t code(const std::vector<std::uint64_t>& d) const {
        std::uint64_t c = 0;
        for (std::size_t i = d.size(); i-- > 0;) c = c * p + d[i];
        return c;
    }
    std::uint64_t fq_add(std::uint64_t a, std::uint64_t b) const {
        auto x = digits(a), y = digits(b);
        for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % p;
        return code(x);
    }
    std::uint64_t fq_neg(std::uint64_t a) const {
        auto x = digits(a);
        for (auto& v : x) v = (p - v) % p;
        return code(x);
    }
    std::uint64_t fq_mul(std::uint64_t a, std::uint64_t b) const {
        const auto x = digits(a), y = digits(b);
        const std::size_t n = x.size();
        std::vector<std::uint64_t> prod(2 * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p;
        for (std::size_t k = 2 * n; k-- > n;) {
            const std::uint64_t c = prod[k];
            if (!c) continue;
            for (std::size_t i = 0; i <= n; ++i) prod[k - n + i] = (prod[k - n + i] + (p - c) * base[i]) % p;
        }
        prod.resize(n);
        return code(prod);
    }
    // (a0 + a1 s)(b0 + b1 s) with s^2 = -ext0 - ext1 s
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        const std::uint64_t a0 = a % q, a1 = a / q, b0 = b % q, b1 = b / q;
        const std::uint64_t hi = fq_mul(a1, b1);
        std::uint64_t c0 = fq_add(fq_mul(a0, b0), fq_neg(fq_mul(hi, ext[0])));
        std::uint64_t c1 = fq_add(fq_add(fq_mul(a0, b1), fq_mul(a1, b0)), fq_neg(fq_mul(hi, ext[1])));
        return c0 + q * c1;
    }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        return fq_add(a % q, b % q) + q * fq_add(a / q, b / q);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
};

// ---- irreducibility by trial division over small fields ----

inline bool trial_irreducible(const PolyGF& f, const FieldTower& t, Over over) {
    const int d = f.degree();
    if (d < 1) return false;
    const std::uint64_t size = over == Over::Fq ? t.q() : t.q2();
    for (int k = 1; 2 * k <= d; ++k) {
        // every monic polynomial of degree k
        std::uint64_t total = 1;
        for (int i = 0; i < k; ++i) total *= size;
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            std::vector<GF> c;
            std::uint64_t v = idx;
            for (int i = 0; i < k; ++i) {
                c.push_back(t.from_code(v % size));
                v /= size;
            }
            c.push_back(t.one());
            if ((f % PolyGF(t.data(), c)).is_zero()) return false;
        }
    }
    return true;
}

// ---- D_n(X, u) by the explicit sum n/(n-k) binom(n-k, k) (-u)^k X^{n-2k} ----

inline SymbolicPoly dickson_closed_form(unsigned n) {
    const auto ctx = symbolic_context();
    std::vector<IntPoly> c(n + 1, IntPoly::integer(ctx, 0));
    if (n == 0) {
        c[0] = IntPoly::integer(ctx, 2);
        return SymbolicPoly(ctx, c);
    }
    for (unsigned k = 0; 2 * k <= n; ++k) {
        BigInt coeff = binomial(n - k, k) * n / (n - k);
        if (k % 2) coeff = -coeff;
        c[n - 2 * k] = IntPoly::integer(ctx, coeff) * symbolic_u().pow(k);
    }
    return SymbolicPoly(ctx, c);
}

// ---- exponent vectors over F_{q^2}[x] ----

/// Leading constant and multiplicity of each monic irreducible factor.
struct Divisor {
    GF lead;
    std::map<std::vector<std::uint32_t>, int> exps;
};

inline std::vector<std::uint32_t> key(const PolyGF& f) {
    std::vector<std::uint32_t> k;
    for (GF c : f.coeffs()) k.push_back(c.code());
    return k;
}

inline Divisor divisor(const RatFunc& f) {
    Divisor d{f.num().leading() / f.den().leading(), {}};
    for (const PolyGF* part : {&f.num(), &f.den()}) {
        if (part->degree() < 1) continue;
        const int sign = part == &f.num() ? 1 : -1;
        for (const auto& [g, m] : factorize(*part, Over::Fq2).factors) d.exps[key(g)] += sign * m;
    }
    return d;
}

/// a2 / a1^j is an ell-th power, decided on exponent vectors and discrete logs.
inline bool power_class_match(const FieldTower& t, const Divisor& a1, const Divisor& a2, unsigned j, unsigned ell) {
    std::map<std::vector<std::uint32_t>, long> diff;
    for (const auto& [k, m] : a2.exps) diff[k] += m;
    for (const auto& [k, m] : a1.exps) diff[k] -= static_cast<long>(j) * m;
    for (const auto& [k, m] : diff)
        if (m % static_cast<long>(ell) != 0) return false;
    const std::uint64_t order = t.q2() - 1;
    const std::uint64_t lg = (static_cast<std::uint64_t>(t.log(a2.lead)) +
                              order * ell - (static_cast<std::uint64_t>(t.log(a1.lead)) * j) % order) % order;
    return lg % std::gcd<std::uint64_t>(ell, order) == 0;
}

/// Least j coprime to ell, or 0.
inline unsigned classify(const FieldTower& t, const RatFunc& a1, const RatFunc& a2, unsigned ell) {
    const Divisor d1 = divisor(a1), d2 = divisor(a2);
    for (unsigned j = 1; j < ell; ++j)
        if (std::gcd(j, ell) == 1 && power_class_match(t, d1, d2, j, ell)) return j;
    return 0;
}

// ---- ramification from the Kummer datum ----

/// e(P|p) = ell / gcd(ell, v_Q(a)) for any place Q of F_{q^2}(x) above p.
inline unsigned kummer_index(const RatFunc& a, unsigned ell, const Place& place) {
    const std::vector<Place> above = place_lift_split(place);
    const int v = valuation(a, above.front());
    return ell / std::gcd(ell, static_cast<unsigned>(std::abs(v)));
}

/// alpha from (A, B) via 2A^2 + 2t AB + (t^2 - 2) B^2 over A^2 + t AB + B^2, t = xi + 1/xi.
inline RatFunc alpha_from_AB(const FieldTower& t, const PolyGF& A, const PolyGF& B) {
    const GF tr = t.xi() + t.xi().inverse();
    const PolyGF two = poly_const(t, t.from_int(2));
    const PolyGF num = two * A * A + two * poly_const(t, tr) * A * B + poly_const(t, tr * tr - t.from_int(2)) * B * B;
    const PolyGF den = A * A + poly_const(t, tr) * A * B + B * B;
    return rf_normalize(num, den);
}

}  // namespace oracle
