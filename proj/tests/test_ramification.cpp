#include <gtest/gtest.h>

#include <cyclicff/io.hpp>
#include <cyclicff/ramification.hpp>
#include <cyclicff/sampling.hpp>

#include "oracles.hpp"

using namespace cyclicff;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::InvariantViolation;
}

const std::vector<std::tuple<std::uint64_t, unsigned, std::uint64_t>> kTowers = {
    {2, 1, 3}, {5, 1, 3}, {3, 1, 4}, {5, 1, 6}, {2, 2, 5}, {11, 1, 3}, {7, 1, 4}};

ExtensionSpec worked() {
    const FieldTower t = build_field_tower(2, 1, 3);
    return build_extension(t, poly_x(t), poly_const(t, t.one())).spec;
}

}  // namespace

TEST(RamificationIndex, WorkedPlaces) {
    const ExtensionSpec s = worked();
    const FieldTower& t = s.tower;
    auto r = ramification_index(s.u, s.alpha, 3, Place::finite(parse_poly(t, "x^2+x+1")));
    EXPECT_EQ(r.v_alpha, -1);
    EXPECT_EQ(r.v_u, 0);
    EXPECT_EQ(r.degree, 2);
    EXPECT_EQ(r.e, 3u);
    EXPECT_EQ(r.case_tag, RamificationCase::NonNegVal_AlphaNonzero);

    r = ramification_index(s.u, s.alpha, 3, Place::infinity());
    EXPECT_EQ(r.v_alpha, 2);
    EXPECT_EQ(r.e, 1u);
    EXPECT_EQ(r.case_tag, RamificationCase::NegVal_EvenU);

    r = ramification_index(s.u, s.alpha, 3, Place::finite(parse_poly(t, "x")));
    EXPECT_EQ(r.v_alpha, 0);
    EXPECT_EQ(r.e, 1u);
    EXPECT_EQ(r.case_tag, RamificationCase::NonNegVal_AlphaZero);
}

TEST(RamificationIndex, Errors) {
    const FieldTower t = build_field_tower(2, 1, 3);
    const Place px = Place::finite(parse_poly(t, "x"));
    // v = 2 > 0 with v(alpha) = -1 at a degree-one place cannot come from a valid datum
    EXPECT_EQ(code_of([&] { ramification_index(rf_one(t), parse_rf(t, "1/x"), 3, px); }),
              ErrorCode::EvenDegreeViolation);
    // v = 3 - 6 < 0 with odd v(u) would give e = 2, which does not divide 3
    EXPECT_EQ(code_of([&] { ramification_index(parse_rf(t, "x"), parse_rf(t, "x^3"), 3, px); }),
              ErrorCode::IndexDivisibilityViolation);
    EXPECT_EQ(code_of([&] { ramification_index(rf_one(t), RatFunc(t.data()), 3, px); }), ErrorCode::ZeroArgument);
}

TEST(RamificationTable, WorkedExample) {
    const ExtensionSpec s = worked();
    const auto table = ramification_table(s);
    const auto ram = ramified_only(table);
    ASSERT_EQ(ram.size(), 1u);
    EXPECT_EQ(ram[0].place, Place::finite(parse_poly(s.tower, "x^2+x+1")));
    EXPECT_EQ(ram[0].e, 3u);
    EXPECT_EQ(ram[0].degree, 2);
    EXPECT_TRUE(table.back().place.is_infinity());
    EXPECT_EQ(table.back().e, 1u);

    // ramified places = places dividing the denominator of alpha
    std::vector<Place> den_places;
    for (const auto& [g, m] : factorize(s.alpha.den(), Over::Fq).factors) den_places.push_back(Place::finite(g));
    std::vector<Place> ram_places;
    for (const auto& r : ram) ram_places.push_back(r.place);
    EXPECT_EQ(ram_places, den_places);
}

TEST(RamificationTable, ConstantAlphaIsUnramified) {
    const FieldTower t = build_field_tower(2, 1, 3);
    // a = xi: a constant datum, alpha = xi + xi^2 = 1
    const ExtensionSpec s = build_extension_from_a(t, rf_const(t, t.xi()), rf_one(t)).spec;
    EXPECT_TRUE(s.alpha.is_one() || s.alpha.is_polynomial());
    EXPECT_TRUE(ramified_only(ramification_table(s)).empty());
}

TEST(RamificationTable, F25Example) {
    const FieldTower t = build_field_tower(5, 1, 3);
    const ExtensionSpec s = build_extension(t, poly_x(t), poly_const(t, t.one())).spec;
    const auto ram = ramified_only(ramification_table(s));
    ASSERT_EQ(ram.size(), 1u);
    const GF tr = t.xi() + t.xi().inverse();
    EXPECT_EQ(ram[0].place.carrier(), poly_x(t) * poly_x(t) + poly_const(t, tr) * poly_x(t) + poly_const(t, t.one()));
    EXPECT_EQ(ram[0].degree, 2);
    EXPECT_EQ(ram[0].e, 3u);
}

TEST(RamificationTable, EvenEllZeroBoundary) {
    // q = 3, ell = 4, A = x, B = 1, u = x: at the degree-one place x,
    // v = 4*1 - 2*2 = 0 and v(alpha) = 2, so e = 2 with odd degree
    const FieldTower t = build_field_tower(3, 1, 4);
    const ExtensionSpec s = build_extension(t, poly_x(t), poly_const(t, t.one()), rf_poly(poly_x(t))).spec;
    const Place px = Place::finite(poly_x(t));
    const auto r = ramification_index(s.u, s.alpha, 4, px);
    EXPECT_EQ(r.v_alpha, 2);
    EXPECT_EQ(r.v_u, 1);
    EXPECT_EQ(r.degree, 1);
    EXPECT_EQ(r.e, 2u);
    EXPECT_EQ(oracle::kummer_index(s.a, 4, px), 2u);
}

TEST(RamificationTable, MatchesKummerOracle) {
    for (auto [p, n, ell] : kTowers) {
        const FieldTower t = build_field_tower(p, n, ell);
        Rng rng(83);
        for (int i = 0; i < 15; ++i) {
            const ExtensionSpec s = random_construction(t, rng).spec;
            const auto table = ramification_table(s);
            ASSERT_TRUE(std::is_sorted(table.begin(), table.end(),
                                       [](const auto& a, const auto& b) { return a.place < b.place; }));
            ASSERT_TRUE(table.back().place.is_infinity());
            for (const auto& r : table) {
                ASSERT_EQ(ell % r.e, 0u);
                ASSERT_EQ(r.e, oracle::kummer_index(s.a, static_cast<unsigned>(ell), r.place))
                    << format_place(t, r.place) << " in " << format_rf(t, s.a);
                if (r.ramified() && static_cast<int>(ell) * r.v_u - 2 * r.v_alpha > 0) {
                    ASSERT_EQ(r.degree % 2, 0);
                }
            }
            // every place where a has a zero or pole was scanned
            const PolyGF norms = s.a.num() * sigma(s.a.num()) * s.a.den() * sigma(s.a.den());
            for (const Place& pl : finite_support(rf_poly(norms), Over::Fq)) {
                ASSERT_NE(std::find_if(table.begin(), table.end(), [&](const auto& r) { return r.place == pl; }),
                          table.end());
            }
        }
    }
}

TEST(RamificationTable, OddEllNormalized) {
    for (auto [p, n, ell] : kTowers) {
        if (ell % 2 == 0) continue;
        const FieldTower t = build_field_tower(p, n, ell);
        Rng rng(89);
        for (int i = 0; i < 15; ++i) {
            const ExtensionSpec s0 = random_construction(t, rng).spec;
            const RatFunc an = normalize_rep(t, s0.a, static_cast<unsigned>(ell));
            if (in_base_function_field(an)) continue;
            const ExtensionSpec s = build_extension_from_a(t, an, rf_one(t)).spec;
            for (const auto& r : ramification_table(s)) {
                ASSERT_EQ(r.ramified(), r.v_alpha < 0);
                if (r.ramified()) {
                    ASSERT_EQ(r.e, ell / std::gcd<std::uint64_t>(ell, -r.v_alpha));
                    ASSERT_GE(r.v_alpha, -static_cast<int>(ell - 1));
                }
                if (r.place.is_infinity()) {
                    ASSERT_GE(r.v_alpha, 0);
                }
            }
        }
    }
}

TEST(RamificationTable, Deterministic) {
    const ExtensionSpec s = worked();
    EXPECT_EQ(ramification_to_json(s.tower, ramification_table(s)), ramification_to_json(s.tower, ramification_table(s)));
}
