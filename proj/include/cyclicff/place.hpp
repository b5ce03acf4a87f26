#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "error.hpp"
#include "factor.hpp"
#include "rational_function.hpp"

namespace cyclicff {

/// A place of F_q(x) or F_{q^2}(x): a monic irreducible carrier or infinity.
class Place {
public:
    static Place infinity() { return Place(); }
    static Place finite(PolyGF carrier) {
        if (carrier.degree() < 1) fail(ErrorCode::InvariantViolation, "place carrier must have positive degree");
        Place p;
        p.pi_ = make_monic(carrier);
        return p;
    }

    bool is_infinity() const { return !pi_.has_value(); }
    const PolyGF& carrier() const {
        if (!pi_) fail(ErrorCode::InvariantViolation, "infinite place has no carrier");
        return *pi_;
    }
    int degree() const { return pi_ ? pi_->degree() : 1; }

    /// Finite places by degree then coefficients; infinity last.
    friend bool operator<(const Place& a, const Place& b) {
        if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
        return poly_less(*a.pi_, *b.pi_);
    }
    friend bool operator==(const Place& a, const Place& b) {
        if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
        return *a.pi_ == *b.pi_;
    }

private:
    Place() = default;
    std::optional<PolyGF> pi_;
};

/// Exponent of the irreducible `pi` in the nonzero polynomial `f`.
inline int multiplicity(PolyGF f, const PolyGF& pi) {
    int m = 0;
    for (;;) {
        auto [quo, rem] = divmod(f, pi);
        if (!rem.is_zero()) return m;
        f = std::move(quo);
        ++m;
    }
}

/// v_place(f); infinity uses deg(den) - deg(num).
inline int valuation(const RatFunc& f, const Place& place) {
    if (f.is_zero()) fail(ErrorCode::ZeroArgument, "valuation of zero is undefined");
    if (place.is_infinity()) return f.den().degree() - f.num().degree();
    return multiplicity(f.num(), place.carrier()) - multiplicity(f.den(), place.carrier());
}

inline int valuation(const PolyGF& f, const Place& place) { return valuation(RatFunc(f), place); }

/// Places of F_{q^2}(x) above a place of F_q(x): one if inert, two (swapped
/// by sigma) if split. Infinity lifts to infinity.
inline std::vector<Place> place_lift_split(const Place& place) {
    if (place.is_infinity()) return {Place::infinity()};
    std::vector<Place> out;
    for (const auto& [g, m] : factorize(place.carrier(), Over::Fq2).factors) out.push_back(Place::finite(g));
    return out;
}

/// Finite places over `over` where f has a zero or pole, sorted.
inline std::vector<Place> finite_support(const RatFunc& f, Over over) {
    std::vector<Place> out;
    for (const PolyGF* part : {&f.num(), &f.den()}) {
        if (part->degree() < 1) continue;
        for (const auto& [g, m] : factorize(*part, over).factors) out.push_back(Place::finite(g));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace cyclicff
