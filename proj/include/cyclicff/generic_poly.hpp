#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "mpoly.hpp"
#include "poly.hpp"
#include "ring_traits.hpp"

namespace cyclicff {

/// Coefficients c[s][j] (0 <= s <= j <= iota) of the power sums
/// w^{2j+r} + sigma(w)^{2j+r} written in y = w + sigma(w) and u = w*sigma(w):
///
///   c[0][j] = 1,   c[s][j] = - sum_{k=1..s} binom(2j+r, k) * c[s-k][j-k].
struct CoeffTable {
    unsigned ell = 0;
    unsigned r = 0;
    unsigned iota = 0;
    std::vector<std::vector<BigInt>> c;  // c[s][j]; zero when s > j

    const BigInt& at(unsigned s, unsigned j) const { return c.at(s).at(j); }
};

inline CoeffTable coeff_table(unsigned ell) {
    if (ell == 0) fail(ErrorCode::InvariantViolation, "ell must be at least 1");
    CoeffTable t;
    t.ell = ell;
    t.r = ell % 2;
    t.iota = ell / 2;
    t.c.assign(t.iota + 1, std::vector<BigInt>(t.iota + 1, BigInt(0)));
    for (unsigned j = 0; j <= t.iota; ++j) t.c[0][j] = 1;
    for (unsigned j = 1; j <= t.iota; ++j) {
        for (unsigned s = 1; s <= j; ++s) {
            BigInt acc = 0;
            for (unsigned k = 1; k <= s; ++k) acc += binomial(2 * j + t.r, k) * t.c[s - k][j - k];
            t.c[s][j] = -acc;
        }
    }
    return t;
}

/// P^ell_{u,alpha} together with its parameters.
template <class R>
struct GenericPolynomial {
    unsigned ell = 0;
    R u;
    R alpha;
    Poly<R> poly;
};

namespace detail {

template <class R>
R ring_pow(const R& base, unsigned e) {
    using T = ring_traits<R>;
    R r = T::one(T::context(base));
    R b = base;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e) b = b * b;
    }
    return r;
}

template <class R>
R ring_inverse(const R& x) {
    using T = ring_traits<R>;
    if constexpr (requires { T::inverse(x); }) {
        return T::inverse(x);
    } else {
        return x.monomial_inverse();
    }
}

}  // namespace detail

/// X^ell + sum_{s=1..iota} c[s][iota] u^s X^{ell-2s} - alpha.
template <class R>
GenericPolynomial<R> build_P(unsigned ell, const R& u, const R& alpha) {
    using T = ring_traits<R>;
    const auto ctx = T::merge(T::context(u), T::context(alpha));
    const CoeffTable table = coeff_table(ell);
    std::vector<R> coeffs(ell + 1, T::zero(ctx));
    coeffs[ell] = T::one(ctx);
    R u_pow = T::one(ctx);
    for (unsigned s = 1; s <= table.iota; ++s) {
        u_pow = u_pow * u;
        coeffs[ell - 2 * s] = coeffs[ell - 2 * s] + T::from_integer(ctx, table.at(s, table.iota)) * u_pow;
    }
    coeffs[0] = coeffs[0] - alpha;
    return {ell, u, alpha, Poly<R>(ctx, std::move(coeffs))};
}

/// P^ell_{u,0}.
template <class R>
Poly<R> build_Q(unsigned ell, const R& u) {
    using T = ring_traits<R>;
    return build_P(ell, u, T::zero(T::context(u))).poly;
}

/// P_{l_t, u^{l_1...l_{t-1}}, alpha}( ... Q_{l_2, u^{l_1}}(Q_{l_1, u}(X)) ... ).
template <class R>
Poly<R> compose_chain(unsigned ell, const std::vector<unsigned>& factors, const R& u, const R& alpha) {
    using T = ring_traits<R>;
    if (factors.empty()) fail(ErrorCode::FactorProductMismatch, "empty factor list");
    unsigned long long product = 1;
    for (unsigned l : factors) {
        if (l < 2 && factors.size() > 1) fail(ErrorCode::FactorProductMismatch, "chain factors must be at least 2");
        product *= l;
    }
    if (product != ell) fail(ErrorCode::FactorProductMismatch, "factor product differs from ell");
    const auto ctx = T::merge(T::context(u), T::context(alpha));
    Poly<R> inner = Poly<R>::variable(ctx);
    R u_k = u;
    for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
        inner = compose(build_Q(factors[i], u_k), inner);
        u_k = detail::ring_pow(u_k, factors[i]);
    }
    return compose(build_P(factors.back(), u_k, alpha).poly, inner);
}

template <class R>
struct HalvingResult {
    GenericPolynomial<R> reduced;  // P^{ell/2}_{1, alpha/u^{ell/2}}
    R scale;                       // u^{ell/2}
    bool identity_holds = false;
};

/// Checks P^ell_{u,alpha}(X) = u^{ell/2} * P^{ell/2}_{1, alpha/u^{ell/2}}((X^2 - 2u)/u).
template <class R>
HalvingResult<R> halve_even(unsigned ell, const R& u, const R& alpha) {
    using T = ring_traits<R>;
    if (ell == 0 || ell % 2 != 0) fail(ErrorCode::InvariantViolation, "halving needs an even ell");
    if (T::is_zero(u)) fail(ErrorCode::ZeroU, "u must be nonzero");
    const auto ctx = T::merge(T::context(u), T::context(alpha));
    const unsigned half = ell / 2;
    const R u_inv = detail::ring_inverse(u);
    const R scale = detail::ring_pow(u, half);
    const R beta = alpha * detail::ring_pow(u_inv, half);

    HalvingResult<R> out{build_P(half, T::one(ctx), beta), scale, false};
    // (X^2 - 2u)/u = u^{-1} X^2 - 2
    Poly<R> y(ctx, {T::from_integer(ctx, -2), T::zero(ctx), u_inv});
    const Poly<R> rhs = scale * compose(out.reduced.poly, y);
    out.identity_holds = (rhs == build_P(ell, u, alpha).poly);
    return out;
}

// ---- symbolic helpers over Z[u^±1, alpha] ----

using IntPoly = MPoly<BigInt>;
using SymbolicPoly = Poly<IntPoly>;

inline IntPoly::Context symbolic_context() { return {2, NoContext{}}; }
inline IntPoly symbolic_u() { return IntPoly::variable(symbolic_context(), 0); }
inline IntPoly symbolic_alpha() { return IntPoly::variable(symbolic_context(), 1); }

/// D_ell(X, u) from D_0 = 2, D_1 = X, D_n = X D_{n-1} - u D_{n-2}.
/// Independent of the coefficient table; used as an oracle for build_Q.
inline SymbolicPoly dickson_oracle(unsigned ell) {
    const auto ctx = symbolic_context();
    const SymbolicPoly x = SymbolicPoly::variable(ctx);
    const SymbolicPoly u = SymbolicPoly::constant(ctx, symbolic_u());
    SymbolicPoly prev = SymbolicPoly::constant(ctx, IntPoly::integer(ctx, 2));
    if (ell == 0) return prev;
    SymbolicPoly cur = x;
    for (unsigned n = 2; n <= ell; ++n) {
        SymbolicPoly next = x * cur - u * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Substitutes u = w v, alpha = w^ell + v^ell, X = w + v into P^ell and tests
/// for the zero polynomial. `modulus` selects F_p instead of Z.
inline bool bivariate_identity_check(unsigned ell, std::optional<std::uint64_t> modulus = std::nullopt) {
    if (!modulus) {
        const IntPoly::Context ctx{2, NoContext{}};
        const IntPoly w = IntPoly::variable(ctx, 0), v = IntPoly::variable(ctx, 1);
        const auto P = build_P(ell, w * v, w.pow(ell) + v.pow(ell)).poly;
        return P(w + v).is_zero();
    }
    using ModPoly = MPoly<Zp>;
    const ModPoly::Context ctx{2, *modulus};
    const ModPoly w = ModPoly::variable(ctx, 0), v = ModPoly::variable(ctx, 1);
    const auto P = build_P(ell, w * v, w.pow(ell) + v.pow(ell)).poly;
    return P(w + v).is_zero();
}

/// Text form such as "X^3 - 3*u*X - alpha".
inline std::string format_symbolic(const SymbolicPoly& f, const std::vector<std::string>& names = {"u", "alpha"},
                                   const std::string& var = "X") {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = f.coeffs().size(); k-- > 0;) {
        // order inside one X-power: fewer alpha first, then higher u power
        std::vector<std::pair<IntPoly::Monomial, BigInt>> terms(f.coeffs()[k].terms().begin(),
                                                               f.coeffs()[k].terms().end());
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
            for (std::size_t i = a.first.size(); i-- > 0;) {
                if (a.first[i] != b.first[i]) return i == a.first.size() - 1 ? a.first[i] < b.first[i]
                                                                            : a.first[i] > b.first[i];
            }
            return false;
        });
        for (const auto& [mono, c] : terms) {
            const bool neg = c < 0;
            const BigInt mag = neg ? BigInt(-c) : c;
            if (first) {
                if (neg) os << '-';
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            std::vector<std::string> factors;
            bool has_symbol = k > 0;
            for (std::size_t i = 0; i < mono.size(); ++i) has_symbol = has_symbol || mono[i] != 0;
            if (mag != 1 || !has_symbol) factors.push_back(mag.str());
            for (std::size_t i = 0; i < mono.size(); ++i) {
                if (mono[i] == 0) continue;
                factors.push_back(names.at(i) + (mono[i] == 1 ? "" : "^" + std::to_string(mono[i])));
            }
            if (k > 0) factors.push_back(var + (k == 1 ? "" : "^" + std::to_string(k)));
            for (std::size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
        }
    }
    if (first) os << '0';
    return os.str();
}

}  // namespace cyclicff
