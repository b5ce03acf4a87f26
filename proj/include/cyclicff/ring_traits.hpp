#pragma once

#include <compare>
#include <cstdint>
#include <ostream>

#include "bigint.hpp"
#include "error.hpp"

namespace cyclicff {

// Coefficient rings plug into Poly / MPoly / RationalFunction through this
// traits class. Rings whose elements need a runtime context (a modulus, a
// field tower) expose it as `context_type`; every Poly carries one so that
// zero and one can be produced even when no coefficient is stored.
//
//   context(r), merge(c1, c2), zero(c), one(c), from_integer(c, n), is_zero(r)
//
// Fields additionally provide inverse(r).
template <class R>
struct ring_traits;

struct NoContext {
    friend bool operator==(NoContext, NoContext) { return true; }
};

template <>
struct ring_traits<BigInt> {
    using context_type = NoContext;
    static context_type context(const BigInt&) { return {}; }
    static context_type merge(context_type, context_type) { return {}; }
    static BigInt zero(context_type) { return 0; }
    static BigInt one(context_type) { return 1; }
    static BigInt from_integer(context_type, const BigInt& n) { return n; }
    static bool is_zero(const BigInt& r) { return r == 0; }
};

/// Residue modulo a runtime prime.
class Zp {
public:
    Zp() = default;
    Zp(std::uint64_t modulus, const BigInt& v) : p_(modulus), v_(reduce_mod(v, modulus)) {}

    std::uint64_t value() const noexcept { return v_; }
    std::uint64_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return v_ == 0; }

    friend Zp operator+(Zp a, Zp b) {
        const std::uint64_t p = a.p_ ? a.p_ : b.p_;
        Zp r;
        r.p_ = p;
        r.v_ = p ? (a.v_ + b.v_) % p : 0;
        return r;
    }
    friend Zp operator-(Zp a) {
        a.v_ = (a.v_ == 0) ? 0 : a.p_ - a.v_;
        return a;
    }
    friend Zp operator-(Zp a, Zp b) { return a + (-b); }
    friend Zp operator*(Zp a, Zp b) {
        const std::uint64_t p = a.p_ ? a.p_ : b.p_;
        Zp r;
        r.p_ = p;
        r.v_ = p ? mulmod(a.v_, b.v_, p) : 0;
        return r;
    }
    Zp& operator+=(Zp o) { return *this = *this + o; }
    Zp& operator-=(Zp o) { return *this = *this - o; }
    Zp& operator*=(Zp o) { return *this = *this * o; }

    Zp inverse() const {
        if (v_ == 0) fail(ErrorCode::ZeroArgument, "inverse of zero residue");
        Zp r = *this;
        r.v_ = powmod(v_, p_ - 2, p_);
        return r;
    }

    friend bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(Zp a, Zp b) { return a.v_ <=> b.v_; }
    friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.v_; }

private:
    std::uint64_t p_ = 0;
    std::uint64_t v_ = 0;
};

template <>
struct ring_traits<Zp> {
    using context_type = std::uint64_t;
    static context_type context(const Zp& r) { return r.modulus(); }
    static context_type merge(context_type a, context_type b) { return a ? a : b; }
    static Zp zero(context_type p) { return Zp(p, 0); }
    static Zp one(context_type p) { return Zp(p, 1); }
    static Zp from_integer(context_type p, const BigInt& n) { return Zp(p, n); }
    static bool is_zero(const Zp& r) { return r.is_zero(); }
    static Zp inverse(const Zp& r) { return r.inverse(); }
};

}  // namespace cyclicff
