#pragma once

#include <algorithm>
#include <compare>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "ring_traits.hpp"

namespace cyclicff {

/// Dense univariate polynomial, coefficients in ascending degree.
/// The highest stored coefficient is never zero; the zero polynomial stores
/// nothing and has degree -1.
template <class R>
class Poly {
public:
    using traits = ring_traits<R>;
    using context_type = typename traits::context_type;

    Poly() = default;
    explicit Poly(context_type ctx) : ctx_(ctx) {}
    Poly(context_type ctx, std::vector<R> coeffs) : ctx_(ctx), c_(std::move(coeffs)) { trim(); }

    static Poly constant(context_type ctx, const R& c) { return Poly(ctx, std::vector<R>{c}); }
    static Poly monomial(context_type ctx, const R& c, std::size_t k) {
        std::vector<R> v(k + 1, traits::zero(ctx));
        v[k] = c;
        return Poly(ctx, std::move(v));
    }
    static Poly variable(context_type ctx) { return monomial(ctx, traits::one(ctx), 1); }
    static Poly one(context_type ctx) { return constant(ctx, traits::one(ctx)); }

    context_type context() const { return ctx_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == traits::one(ctx_); }
    const std::vector<R>& coeffs() const { return c_; }
    R coeff(std::size_t k) const { return k < c_.size() ? c_[k] : traits::zero(ctx_); }
    R leading() const { return c_.empty() ? traits::zero(ctx_) : c_.back(); }
    void set_coeff(std::size_t k, const R& v) {
        if (k >= c_.size()) c_.resize(k + 1, traits::zero(ctx_));
        c_[k] = v;
        trim();
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r(traits::merge(a.ctx_, b.ctx_));
        const std::size_t n = std::max(a.c_.size(), b.c_.size());
        r.c_.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (i >= a.c_.size()) r.c_.push_back(b.c_[i]);
            else if (i >= b.c_.size()) r.c_.push_back(a.c_[i]);
            else r.c_.push_back(a.c_[i] + b.c_[i]);
        }
        r.trim();
        return r;
    }
    friend Poly operator-(const Poly& a) {
        Poly r = a;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r(traits::merge(a.ctx_, b.ctx_));
        if (a.is_zero() || b.is_zero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, traits::zero(r.ctx_));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (traits::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
        }
        r.trim();
        return r;
    }
    friend Poly operator*(const R& s, const Poly& a) {
        Poly r = a;
        for (auto& x : r.c_) x = s * x;
        r.trim();
        return r;
    }
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Horner evaluation at a point of the coefficient ring.
    R operator()(const R& x) const {
        R acc = traits::zero(traits::merge(ctx_, traits::context(x)));
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && traits::is_zero(c_.back())) c_.pop_back();
    }

    context_type ctx_{};
    std::vector<R> c_;
};

/// Degree first, then ascending coefficient tuples; used for canonical output order.
template <class R>
bool poly_less(const Poly<R>& a, const Poly<R>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

template <class R>
Poly<R> pow(const Poly<R>& base, unsigned e) {
    Poly<R> r = Poly<R>::one(base.context());
    Poly<R> b = base;
    while (e) {
        if (e & 1u) r *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return r;
}

/// f(g(X)) by Horner.
template <class R>
Poly<R> compose(const Poly<R>& f, const Poly<R>& g) {
    using T = ring_traits<R>;
    const auto ctx = T::merge(f.context(), g.context());
    Poly<R> acc(ctx);
    for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = acc * g + Poly<R>::constant(ctx, f.coeffs()[i]);
    return acc;
}

template <class R>
Poly<R> derivative(const Poly<R>& f) {
    using T = ring_traits<R>;
    std::vector<R> out;
    for (std::size_t i = 1; i < f.coeffs().size(); ++i)
        out.push_back(T::from_integer(f.context(), BigInt(i)) * f.coeffs()[i]);
    return Poly<R>(f.context(), std::move(out));
}

/// Applies `fn` to every coefficient.
template <class R, class Fn>
Poly<R> map_coeffs(const Poly<R>& f, Fn fn) {
    std::vector<R> out;
    out.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) out.push_back(fn(c));
    return Poly<R>(f.context(), std::move(out));
}

// ---- operations that need a coefficient field ----

template <class R>
Poly<R> make_monic(const Poly<R>& f) {
    if (f.is_zero()) return f;
    const R inv = ring_traits<R>::inverse(f.leading());
    return inv * f;
}

/// Quotient and remainder with deg(remainder) < deg(b).
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
    using T = ring_traits<R>;
    if (b.is_zero()) fail(ErrorCode::DivisionByZeroPoly, "polynomial division by zero");
    const auto ctx = T::merge(a.context(), b.context());
    if (a.degree() < b.degree()) return {Poly<R>(ctx), a};
    std::vector<R> rem = a.coeffs();
    const int db = b.degree();
    const R inv_lead = T::inverse(b.leading());
    std::vector<R> quo(static_cast<std::size_t>(a.degree() - db + 1), T::zero(ctx));
    for (int k = a.degree() - db; k >= 0; --k) {
        const R f = rem[static_cast<std::size_t>(k + db)] * inv_lead;
        quo[static_cast<std::size_t>(k)] = f;
        if (T::is_zero(f)) continue;
        for (int i = 0; i <= db; ++i) {
            auto& slot = rem[static_cast<std::size_t>(k + i)];
            slot = slot - f * b.coeffs()[static_cast<std::size_t>(i)];
        }
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly<R>(ctx, std::move(quo)), Poly<R>(ctx, std::move(rem))};
}

template <class R>
Poly<R> operator%(const Poly<R>& a, const Poly<R>& b) {
    return divmod(a, b).second;
}

template <class R>
Poly<R> operator/(const Poly<R>& a, const Poly<R>& b) {
    return divmod(a, b).first;
}

/// Monic greatest common divisor; gcd(0, 0) is an error.
template <class R>
Poly<R> gcd(Poly<R> a, Poly<R> b) {
    if (a.is_zero() && b.is_zero()) fail(ErrorCode::DivisionByZeroPoly, "gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Poly<R> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

/// base^e mod m for an arbitrary-size exponent.
template <class R>
Poly<R> pow_mod(const Poly<R>& base, const BigInt& e, const Poly<R>& m) {
    Poly<R> r = Poly<R>::one(m.context()) % m;
    if (e == 0) return r;
    Poly<R> b = base % m;
    const std::size_t top = boost::multiprecision::msb(e);
    for (std::size_t i = top + 1; i-- > 0;) {
        r = (r * r) % m;
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) r = (r * b) % m;
    }
    return r;
}

}  // namespace cyclicff
