#pragma once

#include <ostream>
#include <utility>

#include "error.hpp"
#include "field_tower.hpp"
#include "poly.hpp"
#include "ring_traits.hpp"

namespace cyclicff {

/// Reduced fraction num/den over a field: den monic, gcd(num, den) = 1,
/// zero stored as 0/1.
template <class F>
class RationalFunction {
public:
    using traits = ring_traits<F>;
    using context_type = typename traits::context_type;

    RationalFunction() = default;
    explicit RationalFunction(context_type ctx) : num_(ctx), den_(Poly<F>::one(ctx)) {}
    explicit RationalFunction(Poly<F> num) : num_(std::move(num)), den_(Poly<F>::one(num_.context())) {}
    RationalFunction(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RationalFunction constant(context_type ctx, const F& c) {
        return RationalFunction(Poly<F>::constant(ctx, c));
    }

    const Poly<F>& num() const { return num_; }
    const Poly<F>& den() const { return den_; }
    context_type context() const { return traits::merge(num_.context(), den_.context()); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a) {
        RationalFunction r = a;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return a;
        if (b.is_zero()) return b;
        // cross-cancel before multiplying to keep degrees small
        const Poly<F> g1 = gcd(a.num_, b.den_);
        const Poly<F> g2 = gcd(b.num_, a.den_);
        RationalFunction r;
        r.num_ = (a.num_ / g1) * (b.num_ / g2);
        r.den_ = (a.den_ / g2) * (b.den_ / g1);
        r.make_den_monic();
        return r;
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        return a * b.inverse();
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    RationalFunction inverse() const {
        if (is_zero()) fail(ErrorCode::ZeroArgument, "inverse of the zero rational function");
        RationalFunction r;
        r.num_ = den_;
        r.den_ = num_;
        r.make_den_monic();
        return r;
    }

    RationalFunction pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        RationalFunction r;
        r.num_ = cyclicff::pow(num_, static_cast<unsigned>(e));
        r.den_ = cyclicff::pow(den_, static_cast<unsigned>(e));
        return r;
    }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

private:
    void normalize() {
        if (den_.is_zero()) fail(ErrorCode::ZeroDenominator, "rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly<F>::one(context());
            return;
        }
        const Poly<F> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        make_den_monic();
    }
    void make_den_monic() {
        if (den_.leading() == traits::one(context())) return;
        const F inv = traits::inverse(den_.leading());
        num_ = inv * num_;
        den_ = inv * den_;
    }

    Poly<F> num_;
    Poly<F> den_;
};

template <class F>
struct ring_traits<RationalFunction<F>> {
    using RF = RationalFunction<F>;
    using context_type = typename ring_traits<F>::context_type;
    static context_type context(const RF& r) { return r.context(); }
    static context_type merge(context_type a, context_type b) { return ring_traits<F>::merge(a, b); }
    static RF zero(context_type c) { return RF(c); }
    static RF one(context_type c) { return RF::constant(c, ring_traits<F>::one(c)); }
    static RF from_integer(context_type c, const BigInt& n) {
        return RF::constant(c, ring_traits<F>::from_integer(c, n));
    }
    static bool is_zero(const RF& r) { return r.is_zero(); }
    static RF inverse(const RF& r) { return r.inverse(); }
};

using PolyGF = Poly<GF>;
using RatFunc = RationalFunction<GF>;

/// Coefficient-wise Frobenius on F_{q^2}[x].
inline PolyGF sigma(const PolyGF& f) {
    return map_coeffs(f, [](GF c) { return sigma(c); });
}

/// Frobenius on numerator and denominator; the result stays reduced.
inline RatFunc sigma(const RatFunc& f) { return RatFunc(sigma(f.num()), sigma(f.den())); }

inline bool has_base_coefficients(const PolyGF& f) {
    for (GF c : f.coeffs())
        if (!c.in_base_field()) return false;
    return true;
}

/// True when f ∈ F_q(x), i.e. sigma(f) = f.
inline bool in_base_function_field(const RatFunc& f) {
    return has_base_coefficients(f.num()) && has_base_coefficients(f.den());
}

inline PolyGF poly_x(const FieldTower& t) { return PolyGF::variable(t.data()); }
inline PolyGF poly_const(const FieldTower& t, GF c) { return PolyGF::constant(t.data(), c); }
inline RatFunc rf_const(const FieldTower& t, GF c) { return RatFunc::constant(t.data(), c); }
inline RatFunc rf_poly(const PolyGF& f) { return RatFunc(f); }

/// num/den reduced: the single normalization entry point.
inline RatFunc rf_normalize(const PolyGF& num, const PolyGF& den) { return RatFunc(num, den); }

}  // namespace cyclicff
