#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "ring_traits.hpp"

namespace cyclicff {

/// Largest supported q; F_{q^2} is tabulated (log/exp), so q^2 must stay small.
inline constexpr std::uint64_t kMaxFieldOrder = 2048;

namespace detail {

// Dense polynomials over F_p on plain vectors, used only while the tower is
// being set up (before any GF element can exist).
using SmallPoly = std::vector<std::uint64_t>;

inline void small_trim(SmallPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline SmallPoly small_mod(SmallPoly a, const SmallPoly& m, std::uint64_t p) {
    small_trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t inv_lead = powmod(m.back(), p - 2, p);
    while (a.size() > dm) {
        const std::uint64_t f = mulmod(a.back(), inv_lead, p);
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + p - mulmod(f, m[i], p)) % p;
        }
        small_trim(a);
    }
    return a;
}

inline SmallPoly small_mulmod(const SmallPoly& a, const SmallPoly& b, const SmallPoly& m, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    SmallPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    return small_mod(std::move(r), m, p);
}

inline SmallPoly small_gcd(SmallPoly a, SmallPoly b, std::uint64_t p) {
    small_trim(a);
    small_trim(b);
    while (!b.empty()) {
        a = small_mod(std::move(a), b, p);
        std::swap(a, b);
    }
    return a;
}

// Rabin-style test: f of degree n is irreducible iff gcd(f, x^{p^i} - x) = 1
// for every 1 <= i <= n/2.
inline bool small_is_irreducible(const SmallPoly& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    if (n == 1) return true;
    SmallPoly h = {0, 1};
    for (std::size_t i = 1; i <= n / 2; ++i) {
        SmallPoly acc = {1};
        SmallPoly base = h;
        std::uint64_t e = p;
        while (e) {
            if (e & 1) acc = small_mulmod(acc, base, f, p);
            base = small_mulmod(base, base, f, p);
            e >>= 1;
        }
        h = acc;
        SmallPoly t = h;
        t.resize(std::max<std::size_t>(t.size(), 2), 0);
        t[1] = (t[1] + p - 1) % p;
        if (small_gcd(f, t, p).size() > 1) return false;
    }
    return true;
}

struct TowerData {
    std::uint64_t p = 0;
    unsigned n = 0;
    std::uint64_t q = 0;
    std::uint64_t q2 = 0;
    std::uint64_t ell = 0;
    std::vector<std::uint64_t> base_modulus;  // ascending, monic, degree n
    std::array<std::uint32_t, 3> ext_modulus{};  // F_q codes, ascending, monic
    std::vector<std::uint64_t> digit_weight;  // p^i, i < 2n
    std::vector<std::uint32_t> exp_table;  // g^i for 0 <= i < q2-1
    std::vector<std::int64_t> log_table;  // -1 for zero
    std::uint32_t generator = 0;
    std::uint32_t xi = 0;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (p == 2) return a ^ b;
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < digit_weight.size(); ++i) {
            const std::uint64_t w = digit_weight[i];
            r += (((a / w) % p + (b / w) % p) % p) * w;
        }
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t neg(std::uint32_t a) const {
        if (p == 2) return a;
        std::uint64_t r = 0;
        for (std::size_t i = 0; i < digit_weight.size(); ++i) {
            const std::uint64_t w = digit_weight[i];
            r += ((p - (a / w) % p) % p) * w;
        }
        return static_cast<std::uint32_t>(r);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        const std::uint64_t e = static_cast<std::uint64_t>(log_table[a] + log_table[b]) % (q2 - 1);
        return exp_table[e];
    }
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) fail(ErrorCode::ZeroArgument, "inverse of zero in F_{q^2}");
        return exp_table[(q2 - 1 - static_cast<std::uint64_t>(log_table[a])) % (q2 - 1)];
    }
    std::uint32_t pow(std::uint32_t a, const BigInt& e) const {
        if (e == 0) return 1;
        if (a == 0) return 0;
        const std::uint64_t m = q2 - 1;
        const std::uint64_t k = reduce_mod(e, m);
        return exp_table[mulmod(static_cast<std::uint64_t>(log_table[a]), k, m)];
    }
    std::uint32_t frobenius(std::uint32_t a) const { return pow(a, BigInt(q)); }

    // structural arithmetic, valid before the tables exist
    std::uint64_t fq_mul_struct(std::uint64_t a, std::uint64_t b) const {
        SmallPoly pa(n), pb(n);
        for (unsigned i = 0; i < n; ++i) {
            pa[i] = (a / digit_weight[i]) % p;
            pb[i] = (b / digit_weight[i]) % p;
        }
        small_trim(pa);
        small_trim(pb);
        const SmallPoly r = small_mulmod(pa, pb, base_modulus, p);
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < r.size(); ++i) code += r[i] * digit_weight[i];
        return code;
    }
    std::uint64_t fq_add_struct(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t r = 0;
        for (unsigned i = 0; i < n; ++i) {
            const std::uint64_t w = digit_weight[i];
            r += (((a / w) % p + (b / w) % p) % p) * w;
        }
        return r;
    }
    std::uint64_t fq_neg_struct(std::uint64_t a) const {
        std::uint64_t r = 0;
        for (unsigned i = 0; i < n; ++i) {
            const std::uint64_t w = digit_weight[i];
            r += ((p - (a / w) % p) % p) * w;
        }
        return r;
    }
    // (a0 + a1 s)(b0 + b1 s) with s^2 = -e1 s - e0
    std::uint64_t mul_struct(std::uint64_t a, std::uint64_t b) const {
        const std::uint64_t a0 = a % q, a1 = a / q, b0 = b % q, b1 = b / q;
        const std::uint64_t hi = fq_mul_struct(a1, b1);
        std::uint64_t c0 = fq_add_struct(fq_mul_struct(a0, b0), fq_neg_struct(fq_mul_struct(hi, ext_modulus[0])));
        std::uint64_t c1 = fq_add_struct(fq_add_struct(fq_mul_struct(a0, b1), fq_mul_struct(a1, b0)),
                                         fq_neg_struct(fq_mul_struct(hi, ext_modulus[1])));
        return c0 + q * c1;
    }
    std::uint64_t pow_struct(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul_struct(r, a);
            a = mul_struct(a, a);
            e >>= 1;
        }
        return r;
    }
};

}  // namespace detail

/// Element of F_{q^2}. F_q and F_p are the subsets with small codes:
/// code = c0 + q*c1 for c0 + c1*s, and an F_q element is the base-p number
/// whose digits are its coordinates over F_p. Zero and one are codes 0 and 1
/// in every tower; a default-constructed element is zero without a tower.
class GF {
public:
    GF() = default;
    GF(const detail::TowerData* tower, std::uint32_t code) : t_(tower), code_(code) {}

    std::uint32_t code() const noexcept { return code_; }
    const detail::TowerData* tower() const noexcept { return t_; }
    bool is_zero() const noexcept { return code_ == 0; }
    bool is_one() const noexcept { return code_ == 1; }
    bool in_base_field() const noexcept { return t_ == nullptr || code_ < t_->q; }
    bool in_prime_field() const noexcept { return t_ == nullptr || code_ < t_->p; }
    std::uint32_t c0() const noexcept { return t_ ? static_cast<std::uint32_t>(code_ % t_->q) : code_; }
    std::uint32_t c1() const noexcept { return t_ ? static_cast<std::uint32_t>(code_ / t_->q) : 0; }

    friend GF operator+(GF a, GF b) {
        const auto* t = a.t_ ? a.t_ : b.t_;
        if (!t) {
            if (a.code_ == 0) return b;
            if (b.code_ == 0) return a;
            fail(ErrorCode::InvariantViolation, "field addition without a tower");
        }
        return GF(t, t->add(a.code_, b.code_));
    }
    friend GF operator-(GF a) {
        if (!a.t_) return a;
        return GF(a.t_, a.t_->neg(a.code_));
    }
    friend GF operator-(GF a, GF b) { return a + (-b); }
    friend GF operator*(GF a, GF b) {
        const auto* t = a.t_ ? a.t_ : b.t_;
        if (!t) return GF(nullptr, a.code_ & b.code_);
        return GF(t, t->mul(a.code_, b.code_));
    }
    friend GF operator/(GF a, GF b) { return a * b.inverse(); }
    GF& operator+=(GF o) { return *this = *this + o; }
    GF& operator-=(GF o) { return *this = *this - o; }
    GF& operator*=(GF o) { return *this = *this * o; }
    GF& operator/=(GF o) { return *this = *this / o; }

    GF inverse() const {
        if (!t_ || code_ == 0) fail(ErrorCode::ZeroArgument, "inverse of zero in F_{q^2}");
        return GF(t_, t_->inv(code_));
    }
    GF pow(const BigInt& e) const {
        if (!t_) return e == 0 ? GF(nullptr, 1) : *this;
        return GF(t_, t_->pow(code_, e));
    }

    friend bool operator==(GF a, GF b) noexcept { return a.code_ == b.code_; }
    friend std::strong_ordering operator<=>(GF a, GF b) noexcept { return a.code_ <=> b.code_; }

private:
    const detail::TowerData* t_ = nullptr;
    std::uint32_t code_ = 0;
};

/// q-power Frobenius: the generator of Gal(F_{q^2}/F_q), sending xi to xi^{-1}.
inline GF sigma(GF c) {
    if (!c.tower()) return c;
    return GF(c.tower(), c.tower()->frobenius(c.code()));
}

template <>
struct ring_traits<GF> {
    using context_type = const detail::TowerData*;
    static context_type context(const GF& r) { return r.tower(); }
    static context_type merge(context_type a, context_type b) { return a ? a : b; }
    static GF zero(context_type t) { return GF(t, 0); }
    static GF one(context_type t) { return GF(t, 1); }
    static GF from_integer(context_type t, const BigInt& v) {
        if (!t) fail(ErrorCode::InvariantViolation, "integer embedding without a field tower");
        return GF(t, static_cast<std::uint32_t>(reduce_mod(v, t->p)));
    }
    static bool is_zero(const GF& r) { return r.is_zero(); }
    static GF inverse(const GF& r) { return r.inverse(); }
};

/// The tower F_p ⊂ F_q ⊂ F_{q^2} together with a primitive ell-th root of
/// unity xi ∈ F_{q^2} \ F_q. Cheap to copy; copies share one immutable table.
class FieldTower {
public:
    FieldTower() = default;
    explicit FieldTower(std::shared_ptr<const detail::TowerData> d) : d_(std::move(d)) {}

    std::uint64_t p() const { return d_->p; }
    unsigned n() const { return d_->n; }
    std::uint64_t q() const { return d_->q; }
    std::uint64_t q2() const { return d_->q2; }
    std::uint64_t ell() const { return d_->ell; }
    const std::vector<std::uint64_t>& base_modulus() const { return d_->base_modulus; }
    const std::array<std::uint32_t, 3>& ext_modulus() const { return d_->ext_modulus; }
    const detail::TowerData* data() const { return d_.get(); }
    bool valid() const { return d_ != nullptr; }

    GF zero() const { return GF(d_.get(), 0); }
    GF one() const { return GF(d_.get(), 1); }
    GF xi() const { return GF(d_.get(), d_->xi); }
    /// Adjoined root s of the quadratic ext_modulus.
    GF s() const { return GF(d_.get(), static_cast<std::uint32_t>(d_->q)); }
    GF generator() const { return GF(d_.get(), d_->generator); }
    GF from_int(std::int64_t v) const { return ring_traits<GF>::from_integer(d_.get(), BigInt(v)); }
    GF from_code(std::uint64_t code) const {
        if (code >= d_->q2) fail(ErrorCode::ParseError, "element code out of range");
        return GF(d_.get(), static_cast<std::uint32_t>(code));
    }
    /// c0 + c1*s from two F_q codes.
    GF element(std::uint64_t c0, std::uint64_t c1) const {
        if (c0 >= d_->q || c1 >= d_->q) fail(ErrorCode::ParseError, "F_q code out of range");
        return GF(d_.get(), static_cast<std::uint32_t>(c0 + d_->q * c1));
    }
    std::int64_t log(GF a) const { return d_->log_table[a.code()]; }
    GF exp(std::uint64_t k) const { return GF(d_.get(), d_->exp_table[k % (d_->q2 - 1)]); }

    /// Solves x^n = c in F_{q^2}; empty when c is not an n-th power.
    std::optional<GF> nth_root(GF c, std::uint64_t n) const {
        if (c.is_zero()) return zero();
        const std::uint64_t m = d_->q2 - 1;
        const std::uint64_t L = static_cast<std::uint64_t>(log(c));
        const std::uint64_t g = gcd_u64(n % m == 0 ? m : n % m, m);
        if (L % g != 0) return std::nullopt;
        const std::uint64_t mg = m / g;
        if (mg == 1) return one();
        // x = (L/g) * (n/g)^{-1} mod m/g
        const std::uint64_t ng = (n / g) % mg;
        std::int64_t old_r = static_cast<std::int64_t>(ng), r = static_cast<std::int64_t>(mg);
        std::int64_t old_s = 1, s = 0;
        while (r != 0) {
            const std::int64_t qt = old_r / r;
            std::tie(old_r, r) = std::make_tuple(r, old_r - qt * r);
            std::tie(old_s, s) = std::make_tuple(s, old_s - qt * s);
        }
        std::int64_t inv = old_s % static_cast<std::int64_t>(mg);
        if (inv < 0) inv += static_cast<std::int64_t>(mg);
        const std::uint64_t x = mulmod((L / g) % mg, static_cast<std::uint64_t>(inv), mg);
        return exp(x);
    }

    friend bool operator==(const FieldTower& a, const FieldTower& b) {
        if (a.d_ == b.d_) return true;
        if (!a.d_ || !b.d_) return false;
        return a.d_->p == b.d_->p && a.d_->n == b.d_->n && a.d_->ell == b.d_->ell &&
               a.d_->base_modulus == b.d_->base_modulus && a.d_->ext_modulus == b.d_->ext_modulus &&
               a.d_->xi == b.d_->xi;
    }

private:
    std::shared_ptr<const detail::TowerData> d_;
};

/// Builds F_p ⊂ F_{p^n} ⊂ F_{p^{2n}} with deterministic moduli and xi.
///
/// Moduli are the monic irreducibles whose ascending coefficient tuple
/// (c_0, c_1, ...) is lexicographically least. The generator g is the element
/// of least code with multiplicative order q^2 - 1, and xi = g^{(q^2-1)/ell}.
inline FieldTower build_field_tower(std::uint64_t p, unsigned n, std::uint64_t ell) {
    if (!is_prime(p)) fail(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (n == 0) fail(ErrorCode::UnsupportedSize, "extension degree n must be positive");
    if (ell < 3) fail(ErrorCode::EllTooSmall, "ell must be at least 3");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
        if (q > kMaxFieldOrder / p) fail(ErrorCode::UnsupportedSize, "q = p^n exceeds the tabulated limit");
        q *= p;
    }
    if ((q + 1) % ell != 0) {
        fail(ErrorCode::CongruenceViolation,
             "q = " + std::to_string(q) + " is not congruent to -1 mod " + std::to_string(ell));
    }

    auto d = std::make_shared<detail::TowerData>();
    d->p = p;
    d->n = n;
    d->q = q;
    d->q2 = q * q;
    d->ell = ell;
    std::uint64_t w = 1;
    for (unsigned i = 0; i < 2 * n; ++i) {
        d->digit_weight.push_back(w);
        w *= p;
    }

    // base modulus: enumerate (c_0, ..., c_{n-1}) with c_0 most significant
    for (std::uint64_t idx = 0;; ++idx) {
        detail::SmallPoly f(n + 1, 0);
        f[n] = 1;
        std::uint64_t t = idx;
        for (unsigned i = n; i-- > 0;) {
            f[i] = t % p;
            t /= p;
        }
        if (f[0] == 0 && n > 1) continue;
        if (detail::small_is_irreducible(f, p)) {
            d->base_modulus = f;
            break;
        }
    }

    // quadratic X^2 + e1 X + e0 with no root in F_q, (e0, e1) lexicographic
    bool found = false;
    for (std::uint64_t e0 = 0; e0 < q && !found; ++e0) {
        for (std::uint64_t e1 = 0; e1 < q && !found; ++e1) {
            bool has_root = false;
            for (std::uint64_t t = 0; t < q && !has_root; ++t) {
                const std::uint64_t v =
                    d->fq_add_struct(d->fq_add_struct(d->fq_mul_struct(t, t), d->fq_mul_struct(e1, t)), e0);
                has_root = (v == 0);
            }
            if (!has_root) {
                d->ext_modulus = {static_cast<std::uint32_t>(e0), static_cast<std::uint32_t>(e1), 1};
                found = true;
            }
        }
    }
    if (!found) fail(ErrorCode::InvariantViolation, "no irreducible quadratic over F_q");

    const std::uint64_t order = d->q2 - 1;
    const auto primes = prime_divisors(order);
    for (std::uint64_t c = 1; c < d->q2; ++c) {
        bool primitive = true;
        for (std::uint64_t r : primes) {
            if (d->pow_struct(c, order / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            d->generator = static_cast<std::uint32_t>(c);
            break;
        }
    }
    d->exp_table.resize(order);
    d->log_table.assign(d->q2, -1);
    std::uint64_t cur = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
        d->exp_table[i] = static_cast<std::uint32_t>(cur);
        d->log_table[cur] = static_cast<std::int64_t>(i);
        cur = d->mul_struct(cur, d->generator);
    }
    d->xi = d->exp_table[order / ell];

    FieldTower tower(std::move(d));
    const GF xi = tower.xi();
    const GF xi_inv = xi.inverse();
    const GF trace = xi + xi_inv;
    if (xi.in_base_field() || !trace.in_base_field() || trace == tower.from_int(2) || trace == tower.from_int(-2) ||
        sigma(xi) != xi_inv) {
        fail(ErrorCode::InvariantViolation, "distinguished root of unity violates tower invariants");
    }
    return tower;
}

/// The norm-one circle U_{q+1} = { eta : eta^{q+1} = 1 }, ascending by code.
inline std::vector<GF> unit_circle(const FieldTower& tower) {
    std::vector<GF> out;
    const BigInt e = tower.q() + 1;
    for (std::uint64_t c = 1; c < tower.q2(); ++c) {
        const GF g = tower.from_code(c);
        if (g.pow(e).is_one()) out.push_back(g);
    }
    return out;
}

/// Human-readable F_q element: an integer for F_p, else a polynomial in t.
inline std::string format_fq(const FieldTower& tower, std::uint64_t code) {
    if (code < tower.p()) return std::to_string(code);
    std::ostringstream os;
    bool first = true;
    os << '(';
    for (unsigned i = 0; i < tower.n(); ++i) {
        const std::uint64_t digit = (code / tower.data()->digit_weight[i]) % tower.p();
        if (digit == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << digit;
        } else {
            if (digit != 1) os << digit << '*';
            os << 't';
            if (i > 1) os << '^' << i;
        }
    }
    os << ')';
    return os.str();
}

/// `c0 + c1*s`, collapsing zero parts.
inline std::string format_gf(const FieldTower& tower, GF c) {
    const std::uint64_t c0 = c.c0(), c1 = c.c1();
    if (c1 == 0) return format_fq(tower, c0);
    std::string s1 = (c1 == 1) ? "s" : format_fq(tower, c1) + "*s";
    if (c0 == 0) return s1;
    return format_fq(tower, c0) + " + " + s1;
}

}  // namespace cyclicff
