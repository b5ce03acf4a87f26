#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "ring_traits.hpp"

namespace cyclicff {

/// Sparse multivariate Laurent polynomial: exponents may be negative, so a
/// single monomial is invertible. Used for the symbolic (u, alpha) and (w, v)
/// identities.
template <class R>
class MPoly {
public:
    using Monomial = std::vector<int>;
    using coeff_traits = ring_traits<R>;

    struct Context {
        std::size_t nvars = 0;
        typename coeff_traits::context_type coeff{};
        friend bool operator==(const Context& a, const Context& b) {
            return a.nvars == b.nvars && a.coeff == b.coeff;
        }
    };

    MPoly() = default;
    explicit MPoly(Context ctx) : ctx_(ctx) {}

    static MPoly constant(Context ctx, const R& c) { return monomial(ctx, c, Monomial(ctx.nvars, 0)); }
    static MPoly integer(Context ctx, const BigInt& n) {
        return constant(ctx, coeff_traits::from_integer(ctx.coeff, n));
    }
    static MPoly variable(Context ctx, std::size_t i, int e = 1) {
        Monomial m(ctx.nvars, 0);
        m.at(i) = e;
        return monomial(ctx, coeff_traits::one(ctx.coeff), m);
    }
    static MPoly monomial(Context ctx, const R& c, Monomial m) {
        MPoly r(ctx);
        if (!coeff_traits::is_zero(c)) r.t_.emplace(std::move(m), c);
        return r;
    }

    const Context& context() const { return ctx_; }
    const std::map<Monomial, R>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    friend MPoly operator+(const MPoly& a, const MPoly& b) {
        MPoly r = a;
        if (r.ctx_.nvars == 0) r.ctx_ = b.ctx_;
        for (const auto& [m, c] : b.t_) r.add_term(m, c);
        return r;
    }
    friend MPoly operator-(const MPoly& a) {
        MPoly r = a;
        for (auto& [m, c] : r.t_) c = -c;
        return r;
    }
    friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly r(a.ctx_.nvars ? a.ctx_ : b.ctx_);
        for (const auto& [ma, ca] : a.t_) {
            for (const auto& [mb, cb] : b.t_) {
                Monomial m(ma.size());
                for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }
    MPoly& operator+=(const MPoly& o) { return *this = *this + o; }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }

    MPoly pow(unsigned e) const {
        MPoly r = constant(ctx_, coeff_traits::one(ctx_.coeff));
        MPoly b = *this;
        while (e) {
            if (e & 1u) r *= b;
            e >>= 1u;
            if (e) b *= b;
        }
        return r;
    }

    /// Inverse of a unit-coefficient monomial (Laurent inverse).
    MPoly monomial_inverse() const {
        if (t_.size() != 1) fail(ErrorCode::ZeroArgument, "only monomials are invertible in a Laurent ring");
        const auto& [m, c] = *t_.begin();
        Monomial inv(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) inv[i] = -m[i];
        if (c == coeff_traits::one(ctx_.coeff)) return monomial(ctx_, c, inv);
        if (c == -coeff_traits::one(ctx_.coeff)) return monomial(ctx_, c, inv);
        if constexpr (requires { coeff_traits::inverse(c); }) {
            return monomial(ctx_, coeff_traits::inverse(c), inv);
        } else {
            fail(ErrorCode::ZeroArgument, "monomial coefficient is not a unit");
        }
    }

    /// Maps every coefficient through `fn` into another coefficient ring.
    template <class S, class Fn>
    MPoly<S> map(typename MPoly<S>::Context ctx, Fn fn) const {
        MPoly<S> r(ctx);
        for (const auto& [m, c] : t_) r += MPoly<S>::monomial(ctx, fn(c), m);
        return r;
    }

private:
    void add_term(const Monomial& m, const R& c) {
        auto it = t_.find(m);
        if (it == t_.end()) {
            if (!coeff_traits::is_zero(c)) t_.emplace(m, c);
            return;
        }
        it->second = it->second + c;
        if (coeff_traits::is_zero(it->second)) t_.erase(it);
    }

    Context ctx_{};
    std::map<Monomial, R> t_;
};

template <class R>
struct ring_traits<MPoly<R>> {
    using M = MPoly<R>;
    using context_type = typename M::Context;
    static context_type context(const M& r) { return r.context(); }
    static context_type merge(const context_type& a, const context_type& b) { return a.nvars ? a : b; }
    static M zero(const context_type& c) { return M(c); }
    static M one(const context_type& c) { return M::constant(c, ring_traits<R>::one(c.coeff)); }
    static M from_integer(const context_type& c, const BigInt& n) { return M::integer(c, n); }
    static bool is_zero(const M& r) { return r.is_zero(); }
};

}  // namespace cyclicff
