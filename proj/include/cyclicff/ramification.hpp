#pragma once

#include <algorithm>
#include <numeric>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "kummer.hpp"
#include "place.hpp"

namespace cyclicff {

enum class RamificationCase { NonNegVal_AlphaNonzero, NonNegVal_AlphaZero, NegVal_OddU, NegVal_EvenU };

constexpr std::string_view case_name(RamificationCase c) noexcept {
    switch (c) {
        case RamificationCase::NonNegVal_AlphaNonzero: return "NonNegVal_AlphaNonzero";
        case RamificationCase::NonNegVal_AlphaZero: return "NonNegVal_AlphaZero";
        case RamificationCase::NegVal_OddU: return "NegVal_OddU";
        case RamificationCase::NegVal_EvenU: return "NegVal_EvenU";
    }
    return "Unknown";
}

struct RamificationRecord {
    Place place = Place::infinity();
    int degree = 1;
    int v_alpha = 0;
    int v_u = 0;
    RamificationCase case_tag = RamificationCase::NonNegVal_AlphaZero;
    unsigned e = 1;

    bool ramified() const { return e > 1; }
};

/// Ramification index at one place of F_q(x) from v(u) and v(alpha).
///
/// With v = ell v(u) - 2 v(alpha) = v(u^ell / alpha^2):
///   v >= 0, v(alpha) != 0 : e = ell / gcd(ell, v(alpha))
///   v >= 0, v(alpha) == 0 : e = 1
///   v <  0                : e = 2 if v(u) is odd, else 1
/// A place with v > 0 and v(alpha) != 0 splits in F_{q^2}(x), so its degree
/// must be even.
inline RamificationRecord ramification_index(const RatFunc& u, const RatFunc& alpha, unsigned ell, const Place& place) {
    if (alpha.is_zero()) fail(ErrorCode::ZeroArgument, "alpha must be nonzero");
    if (u.is_zero()) fail(ErrorCode::ZeroU, "u must be nonzero");
    RamificationRecord rec;
    rec.place = place;
    rec.degree = place.degree();
    rec.v_alpha = valuation(alpha, place);
    rec.v_u = valuation(u, place);
    const long v = static_cast<long>(ell) * rec.v_u - 2L * rec.v_alpha;
    if (v >= 0) {
        if (rec.v_alpha != 0) {
            rec.case_tag = RamificationCase::NonNegVal_AlphaNonzero;
            rec.e = ell / std::gcd(ell, static_cast<unsigned>(std::abs(rec.v_alpha)));
            if (v > 0 && rec.degree % 2 != 0)
                fail(ErrorCode::EvenDegreeViolation, "ramified split place has odd degree");
        } else {
            rec.case_tag = RamificationCase::NonNegVal_AlphaZero;
            rec.e = 1;
        }
    } else if (rec.v_u % 2 != 0) {
        rec.case_tag = RamificationCase::NegVal_OddU;
        rec.e = 2;
    } else {
        rec.case_tag = RamificationCase::NegVal_EvenU;
        rec.e = 1;
    }
    if (ell % rec.e != 0) fail(ErrorCode::IndexDivisibilityViolation, "ramification index does not divide ell");
    return rec;
}

/// One record per place in supp(u) ∪ supp(alpha) ∪ {infinity}; every other
/// place has v(u) = v(alpha) = 0 and is unramified.
inline std::vector<RamificationRecord> ramification_table(const ExtensionSpec& spec) {
    const unsigned ell = spec.ell();
    std::vector<Place> places = finite_support(spec.u, Over::Fq);
    for (Place& p : finite_support(spec.alpha, Over::Fq)) places.push_back(std::move(p));
    std::sort(places.begin(), places.end());
    places.erase(std::unique(places.begin(), places.end()), places.end());
    places.push_back(Place::infinity());

    std::vector<RamificationRecord> out;
    for (const Place& p : places) out.push_back(ramification_index(spec.u, spec.alpha, ell, p));

    // odd ell, u = 1: a place with -(ell-1) <= v(alpha) <= -1 is ramified and
    // one with v(alpha) >= 0 is not
    if (ell % 2 == 1 && spec.u.is_one()) {
        for (const auto& rec : out) {
            const bool normalized_pole = rec.v_alpha < 0 && rec.v_alpha > -static_cast<int>(ell);
            if ((normalized_pole && !rec.ramified()) || (rec.v_alpha >= 0 && rec.ramified()))
                fail(ErrorCode::InvariantViolation, "odd-ell ramification criterion violated");
        }
    }
    return out;
}

inline std::vector<RamificationRecord> ramified_only(const std::vector<RamificationRecord>& table) {
    std::vector<RamificationRecord> out;
    std::copy_if(table.begin(), table.end(), std::back_inserter(out), [](const auto& r) { return r.ramified(); });
    return out;
}

}  // namespace cyclicff
