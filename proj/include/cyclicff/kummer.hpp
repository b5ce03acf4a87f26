#pragma once

#include <memory>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "factor.hpp"
#include "field_tower.hpp"
#include "generic_poly.hpp"
#include "place.hpp"
#include "rational_function.hpp"

namespace cyclicff {

struct ABPair {
    PolyGF A;
    PolyGF B;
};

/// A validated cyclic extension L = F_q(x)(y) of degree ell, described by its
/// Kummer datum a ∈ F_{q^2}(x) \ F_q(x) with a*sigma(a) = u^ell and
/// alpha = a + sigma(a).
struct ExtensionSpec {
    FieldTower tower;
    RatFunc a;
    RatFunc u;
    RatFunc alpha;
    std::optional<ABPair> provenance;
    GF eta;                    // unit applied by the generator search
    bool u_defaulted = false;  // even ell built without an explicit u

    unsigned ell() const { return static_cast<unsigned>(tower.ell()); }
};

inline RatFunc rf_one(const FieldTower& t) { return rf_const(t, t.one()); }

// ---------------------------------------------------------------------------
// Norm-one parametrization

/// theta != 0 with d = theta / sigma(theta), for d with d*sigma(d) = 1.
inline RatFunc hilbert90(const FieldTower& tower, const RatFunc& d) {
    if (d.is_zero()) fail(ErrorCode::ZeroInput, "hilbert90 of zero");
    if (!(d * sigma(d)).is_one()) fail(ErrorCode::NormNotOne, "d * sigma(d) != 1");
    // gamma = 1: theta = gamma + d*sigma(gamma); if that vanishes then
    // d = -gamma/sigma(gamma) and (xi - xi^{-1}) * gamma works instead.
    const RatFunc gamma = rf_one(tower);
    const RatFunc theta = gamma + d * sigma(gamma);
    if (!theta.is_zero()) return theta;
    return rf_const(tower, tower.xi() - tower.xi().inverse()) * gamma;
}

struct FromAB {
    RatFunc d;      // (A + xi B) / (A + xi^{-1} B)
    RatFunc alpha;  // d + sigma(d) ∈ F_q(x)
};

inline FromAB from_AB(const FieldTower& tower, const PolyGF& A, const PolyGF& B) {
    if (A.is_zero() && B.is_zero()) fail(ErrorCode::ZeroPair, "(A, B) = (0, 0)");
    if (!has_base_coefficients(A) || !has_base_coefficients(B))
        fail(ErrorCode::InvariantViolation, "A and B must have F_q coefficients");
    const PolyGF xi = poly_const(tower, tower.xi());
    const PolyGF xi_inv = poly_const(tower, tower.xi().inverse());
    const PolyGF den = A + xi_inv * B;
    if (den.is_zero()) fail(ErrorCode::ZeroDenominator, "A + xi^{-1} B = 0");
    FromAB out{rf_normalize(A + xi * B, den), RatFunc()};
    out.alpha = out.d + sigma(out.d);
    if (!(out.d * sigma(out.d)).is_one() || !in_base_function_field(out.alpha))
        fail(ErrorCode::InvariantViolation, "(A, B) parametrization lost the norm-one property");
    return out;
}

// ---------------------------------------------------------------------------
// Power classes in F_{q^2}(x)

struct PowerTest {
    bool is_power = false;
    std::optional<RatFunc> witness;  // g with g^n = f
};

/// Decides f ∈ (F_{q^2}(x)^*)^n by factoring numerator and denominator.
inline PowerTest is_nth_power(const FieldTower& tower, const RatFunc& f, unsigned n) {
    if (f.is_zero()) fail(ErrorCode::ZeroInput, "power test of zero");
    if (n == 0) fail(ErrorCode::InvariantViolation, "exponent must be positive");
    const auto root_const = tower.nth_root(f.num().leading(), n);
    if (!root_const) return {};
    PolyGF num_root = poly_const(tower, *root_const);
    PolyGF den_root = PolyGF::one(tower.data());
    for (auto [part, acc] : {std::pair{&f.num(), &num_root}, std::pair{&f.den(), &den_root}}) {
        if (part->degree() < 1) continue;
        for (const auto& [g, m] : factorize(*part, Over::Fq2).factors) {
            if (m % static_cast<int>(n) != 0) return {};
            *acc *= pow(g, static_cast<unsigned>(m) / n);
        }
    }
    return {true, rf_normalize(num_root, den_root)};
}

/// X^ell - a irreducible over F_{q^2}(x): a is no ell_i-th power for any
/// prime ell_i | ell, and a ∉ -4 (F_{q^2}(x)^*)^4 when 4 | ell.
inline bool kummer_irreducible(const FieldTower& tower, const RatFunc& a, unsigned ell) {
    if (a.is_zero()) fail(ErrorCode::ZeroInput, "Kummer datum is zero");
    for (std::uint64_t r : prime_divisors(ell))
        if (is_nth_power(tower, a, static_cast<unsigned>(r)).is_power) return false;
    if (ell % 4 == 0) {
        const RatFunc shifted = -a / rf_const(tower, tower.from_int(4));
        if (is_nth_power(tower, shifted, 4).is_power) return false;
    }
    return true;
}

/// Representative sigma(theta)/theta of the class of a modulo ell-th powers
/// whose irreducible exponents all lie in [0, ell-1].
inline RatFunc normalize_rep(const FieldTower& tower, const RatFunc& a, unsigned ell) {
    if (a.is_zero() || !(a * sigma(a)).is_one()) fail(ErrorCode::NormNotOne, "a * sigma(a) != 1");
    // a = sigma(gamma)/gamma  <=>  sigma(a) = gamma/sigma(gamma)
    const RatFunc g = hilbert90(tower, sigma(a));
    PolyGF gamma = g.num() * sigma(g.den());
    for (;;) {
        const PolyGF common = gcd(gamma, sigma(gamma));
        if (common.degree() < 1) break;
        gamma = gamma / common;
    }
    PolyGF theta = poly_const(tower, gamma.leading());
    if (gamma.degree() > 0) {
        for (const auto& [f, m] : factorize(gamma, Over::Fq2).factors)
            theta *= pow(f, static_cast<unsigned>(m) % ell);
    }
    return rf_normalize(sigma(theta), theta);
}

// ---------------------------------------------------------------------------
// The Kummer model M = F_{q^2}(x)[W]/(W^ell - a)

namespace detail {
struct ModelData {
    FieldTower tower;
    unsigned ell = 0;
    RatFunc a;
    RatFunc u;
    std::vector<RatFunc> sigma_w_pow;  // sigma(W)^i = sigma_w_pow[i] * W^{ell-i}, 1 <= i < ell
};
}  // namespace detail

/// Element sum_i f_i W^i of the Kummer model.
class ModelElement {
public:
    using Data = std::shared_ptr<const detail::ModelData>;

    ModelElement() = default;
    ModelElement(Data m, std::vector<RatFunc> coeffs) : m_(std::move(m)), c_(std::move(coeffs)) {
        if (m_ && c_.size() != m_->ell) fail(ErrorCode::InvariantViolation, "model element needs ell coefficients");
    }

    const Data& model() const { return m_; }
    const std::vector<RatFunc>& coeffs() const { return c_; }
    bool is_zero() const {
        for (const auto& f : c_)
            if (!f.is_zero()) return false;
        return true;
    }
    /// True for elements of the embedded F_q(x).
    bool in_base() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return c_.empty() || in_base_function_field(c_[0]);
    }
    RatFunc base_value() const {
        if (!in_base()) fail(ErrorCode::InvariantViolation, "model element is not in F_q(x)");
        return c_.empty() ? RatFunc() : c_[0];
    }

    friend ModelElement operator+(const ModelElement& a, const ModelElement& b) {
        if (!a.m_) return b;
        if (!b.m_) return a;
        ModelElement r = a;
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = r.c_[i] + b.c_[i];
        return r;
    }
    friend ModelElement operator-(const ModelElement& a) {
        ModelElement r = a;
        for (auto& f : r.c_) f = -f;
        return r;
    }
    friend ModelElement operator-(const ModelElement& a, const ModelElement& b) { return a + (-b); }
    friend ModelElement operator*(const ModelElement& a, const ModelElement& b) {
        if (!a.m_) return a;
        if (!b.m_) return b;
        const unsigned ell = a.m_->ell;
        std::vector<RatFunc> lo(ell, RatFunc(a.m_->tower.data())), hi(ell, RatFunc(a.m_->tower.data()));
        for (unsigned i = 0; i < ell; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (unsigned j = 0; j < ell; ++j) {
                if (b.c_[j].is_zero()) continue;
                const RatFunc t = a.c_[i] * b.c_[j];
                if (i + j < ell) lo[i + j] += t;
                else hi[i + j - ell] += t;
            }
        }
        for (unsigned k = 0; k < ell; ++k)
            if (!hi[k].is_zero()) lo[k] += a.m_->a * hi[k];  // W^ell = a
        return ModelElement(a.m_, std::move(lo));
    }
    friend ModelElement operator*(const RatFunc& s, const ModelElement& e) {
        ModelElement r = e;
        for (auto& f : r.c_) f = s * f;
        return r;
    }
    ModelElement& operator+=(const ModelElement& o) { return *this = *this + o; }
    ModelElement& operator*=(const ModelElement& o) { return *this = *this * o; }

    friend bool operator==(const ModelElement& a, const ModelElement& b) {
        if (!a.m_ || !b.m_) return a.is_zero() && b.is_zero();
        return a.c_ == b.c_;
    }

private:
    Data m_;
    std::vector<RatFunc> c_;
};

template <>
struct ring_traits<ModelElement> {
    using context_type = ModelElement::Data;
    static context_type context(const ModelElement& e) { return e.model(); }
    static context_type merge(const context_type& a, const context_type& b) { return a ? a : b; }
    static ModelElement zero(const context_type& m) {
        return ModelElement(m, std::vector<RatFunc>(m->ell, RatFunc(m->tower.data())));
    }
    static ModelElement one(const context_type& m) { return from_integer(m, 1); }
    static ModelElement from_integer(const context_type& m, const BigInt& n) {
        ModelElement z = zero(m);
        std::vector<RatFunc> c = z.coeffs();
        c[0] = ring_traits<RatFunc>::from_integer(m->tower.data(), n);
        return ModelElement(m, std::move(c));
    }
    static bool is_zero(const ModelElement& e) { return e.is_zero(); }
};

/// Factory for elements of F_{q^2}(x)[W]/(W^ell - a) with the semilinear
/// extension of sigma given by sigma(W) = u W^{ell-1} / a.
class KummerModel {
public:
    KummerModel(const FieldTower& tower, const RatFunc& a, const RatFunc& u, unsigned ell) {
        if (a.is_zero()) fail(ErrorCode::ZeroInput, "Kummer datum is zero");
        if (u.is_zero()) fail(ErrorCode::ZeroU, "u must be nonzero");
        auto d = std::make_shared<detail::ModelData>();
        d->tower = tower;
        d->ell = ell;
        d->a = a;
        d->u = u;
        d->sigma_w_pow.assign(ell, RatFunc(tower.data()));
        const RatFunc a_inv = a.inverse();
        RatFunc u_pow = rf_one(tower);
        for (unsigned i = 1; i < ell; ++i) {
            u_pow *= u;
            d->sigma_w_pow[i] = u_pow * a_inv;  // (u W^{ell-1}/a)^i = (u^i/a) W^{ell-i}
        }
        d_ = std::move(d);
    }

    const ModelElement::Data& data() const { return d_; }
    unsigned ell() const { return d_->ell; }

    ModelElement zero() const { return ring_traits<ModelElement>::zero(d_); }
    ModelElement embed(const RatFunc& f) const {
        std::vector<RatFunc> c(d_->ell, RatFunc(d_->tower.data()));
        c[0] = f;
        return ModelElement(d_, std::move(c));
    }
    ModelElement constant(GF c) const { return embed(rf_const(d_->tower, c)); }
    /// f * W^k for 0 <= k < ell.
    ModelElement monomial(const RatFunc& f, unsigned k) const {
        std::vector<RatFunc> c(d_->ell, RatFunc(d_->tower.data()));
        c.at(k) = f;
        return ModelElement(d_, std::move(c));
    }
    ModelElement W() const { return monomial(rf_one(d_->tower), 1 % d_->ell); }
    ModelElement sigma_W() const { return monomial(d_->u / d_->a, d_->ell - 1); }

    ModelElement sigma(const ModelElement& e) const {
        std::vector<RatFunc> c(d_->ell, RatFunc(d_->tower.data()));
        c[0] = cyclicff::sigma(e.coeffs()[0]);
        for (unsigned i = 1; i < d_->ell; ++i) {
            if (e.coeffs()[i].is_zero()) continue;
            c[d_->ell - i] += cyclicff::sigma(e.coeffs()[i]) * d_->sigma_w_pow[i];
        }
        return ModelElement(d_, std::move(c));
    }

    /// Coordinates over F_q(x) in the basis {W^i, s W^i}, length 2 ell.
    std::vector<RatFunc> coordinates(const ModelElement& e) const {
        std::vector<RatFunc> out;
        out.reserve(2 * d_->ell);
        std::vector<RatFunc> second;
        for (const RatFunc& f : e.coeffs()) {
            const auto [f0, f1] = split(f);
            out.push_back(f0);
            second.push_back(f1);
        }
        out.insert(out.end(), second.begin(), second.end());
        return out;
    }

    /// f = f0 + s f1 with f0, f1 ∈ F_q(x).
    std::pair<RatFunc, RatFunc> split(const RatFunc& f) const {
        const auto* t = d_->tower.data();
        const PolyGF num = f.num() * cyclicff::sigma(f.den());
        const PolyGF den = f.den() * cyclicff::sigma(f.den());
        std::vector<GF> n0, n1;
        for (GF c : num.coeffs()) {
            n0.emplace_back(t, c.c0());
            n1.emplace_back(t, c.c1());
        }
        return {rf_normalize(PolyGF(t, std::move(n0)), den), rf_normalize(PolyGF(t, std::move(n1)), den)};
    }

private:
    ModelElement::Data d_;
};

/// Monic minimal polynomial over F_q(x) via the first linear dependence among
/// 1, e, e^2, ... in the 2 ell-dimensional F_q(x)-space M.
inline Poly<RatFunc> minimal_poly_in_model(const KummerModel& model, const ModelElement& e) {
    const auto& tower = model.data()->tower;
    const auto* ctx = tower.data();
    struct Row {
        std::vector<RatFunc> v;
        std::vector<RatFunc> comb;
        std::size_t pivot;
    };
    std::vector<Row> rows;
    ModelElement power = model.constant(tower.one());
    const std::size_t dim = 2 * model.ell();
    for (std::size_t k = 0; k <= dim; ++k) {
        std::vector<RatFunc> v = model.coordinates(power);
        std::vector<RatFunc> comb(k + 1, RatFunc(ctx));
        comb[k] = rf_one(tower);
        for (const Row& row : rows) {
            if (v[row.pivot].is_zero()) continue;
            const RatFunc factor = v[row.pivot] / row.v[row.pivot];
            for (std::size_t i = 0; i < dim; ++i)
                if (!row.v[i].is_zero()) v[i] -= factor * row.v[i];
            for (std::size_t i = 0; i < row.comb.size(); ++i)
                if (!row.comb[i].is_zero()) comb[i] -= factor * row.comb[i];
        }
        std::size_t pivot = dim;
        for (std::size_t i = 0; i < dim; ++i) {
            if (!v[i].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot == dim) return Poly<RatFunc>(ctx, std::move(comb));
        rows.push_back({std::move(v), std::move(comb), pivot});
        power *= e;
    }
    fail(ErrorCode::InvariantViolation, "no linear dependence within the model dimension");
}

// ---------------------------------------------------------------------------
// Construction

namespace detail {
inline void check_kummer_datum(const FieldTower& tower, const RatFunc& a, const RatFunc& u, unsigned ell) {
    if (u.is_zero()) fail(ErrorCode::ZeroU, "u must be nonzero");
    if (!in_base_function_field(u)) fail(ErrorCode::InvalidU, "u must lie in F_q(x)");
    if (a.is_zero()) fail(ErrorCode::ZeroInput, "Kummer datum is zero");
    if (in_base_function_field(a)) fail(ErrorCode::DegenerateA, "a lies in F_q(x)");
    if (!(a * sigma(a) == u.pow(ell))) fail(ErrorCode::NormNotOne, "a * sigma(a) != u^ell");
    if (!kummer_irreducible(tower, a, ell)) fail(ErrorCode::NotIrreducible, "X^ell - a is reducible");
}
}  // namespace detail

/// First eta ∈ U_{q+1} (ascending code order) for which eta W + sigma(eta W)
/// has degree ell over F_q(x).
inline GF find_eta(const FieldTower& tower, const RatFunc& a, const RatFunc& u, unsigned ell) {
    detail::check_kummer_datum(tower, a, u, ell);
    const KummerModel model(tower, a, u, ell);
    const ModelElement w = model.W();
    const ModelElement sw = model.sigma_W();
    for (GF eta : unit_circle(tower)) {
        const ModelElement y = rf_const(tower, eta) * w + rf_const(tower, sigma(eta)) * sw;
        if (minimal_poly_in_model(model, y).degree() == static_cast<int>(ell)) return eta;
    }
    fail(ErrorCode::SearchExhausted, "no eta in U_{q+1} yields a generator");
}

struct Construction {
    ExtensionSpec spec;
    GenericPolynomial<RatFunc> generic;
};

/// Validates (a, u), rescales a by eta^ell from the generator search, and
/// returns the spec with P^ell_{u,alpha}.
inline Construction build_extension_from_a(const FieldTower& tower, const RatFunc& a, const RatFunc& u,
                                           std::optional<ABPair> provenance = std::nullopt) {
    const unsigned ell = static_cast<unsigned>(tower.ell());
    const GF eta = find_eta(tower, a, u, ell);
    Construction out;
    out.spec.tower = tower;
    out.spec.eta = eta;
    out.spec.a = rf_const(tower, eta.pow(ell)) * a;
    out.spec.u = u;
    out.spec.alpha = out.spec.a + sigma(out.spec.a);
    out.spec.provenance = std::move(provenance);
    if (!in_base_function_field(out.spec.alpha)) fail(ErrorCode::InvariantViolation, "alpha is not in F_q(x)");
    out.generic = build_P(ell, out.spec.u, out.spec.alpha);
    return out;
}

/// Odd ell: a = sigma(A + xi B)/(A + xi B), u = 1.
/// Even ell: a = u^{ell/2} sigma(A + xi B)/(A + xi B) for the given u (default 1).
inline Construction build_extension(const FieldTower& tower, const PolyGF& A, const PolyGF& B,
                                    std::optional<RatFunc> u = std::nullopt) {
    const unsigned ell = static_cast<unsigned>(tower.ell());
    const FromAB fab = from_AB(tower, A, B);
    const RatFunc norm_one = sigma(fab.d);
    RatFunc a, uu;
    bool defaulted = false;
    if (ell % 2 == 1) {
        if (u && !u->is_one()) fail(ErrorCode::InvalidU, "odd ell uses u = 1");
        uu = rf_one(tower);
        a = norm_one;
    } else {
        defaulted = !u.has_value();
        uu = u.value_or(rf_one(tower));
        if (uu.is_zero()) fail(ErrorCode::ZeroU, "u must be nonzero");
        a = uu.pow(ell / 2) * norm_one;
    }
    Construction out = build_extension_from_a(tower, a, uu, ABPair{A, B});
    out.spec.u_defaulted = defaulted;
    return out;
}

/// Re-checks every ExtensionSpec invariant; throws on the first violation.
inline void validate_spec(const ExtensionSpec& spec) {
    detail::check_kummer_datum(spec.tower, spec.a, spec.u, spec.ell());
    if (!(spec.alpha == spec.a + sigma(spec.a))) fail(ErrorCode::InvariantViolation, "alpha != a + sigma(a)");
}

inline KummerModel model_of(const ExtensionSpec& spec) {
    return KummerModel(spec.tower, spec.a, spec.u, spec.ell());
}

/// y_i = xi^i W + xi^{-i} u W^{ell-1}/a, i = 0..ell-1.
inline std::vector<ModelElement> conjugate_roots_in_model(const ExtensionSpec& spec) {
    const KummerModel model = model_of(spec);
    const ModelElement w = model.W();
    const ModelElement sw = model.sigma_W();
    std::vector<ModelElement> out;
    GF zeta = spec.tower.one();
    for (unsigned i = 0; i < spec.ell(); ++i) {
        out.push_back(rf_const(spec.tower, zeta) * w + rf_const(spec.tower, zeta.inverse()) * sw);
        zeta *= spec.tower.xi();
    }
    return out;
}

/// prod_i (X - y_i) expanded in M; every coefficient must land in F_q(x).
inline Poly<RatFunc> conjugate_product(const ExtensionSpec& spec) {
    const KummerModel model = model_of(spec);
    using MP = Poly<ModelElement>;
    MP acc = MP::one(model.data());
    for (const ModelElement& y : conjugate_roots_in_model(spec))
        acc *= MP(model.data(), {-y, ring_traits<ModelElement>::one(model.data())});
    std::vector<RatFunc> out;
    for (const ModelElement& c : acc.coeffs()) out.push_back(c.base_value());
    return Poly<RatFunc>(spec.tower.data(), std::move(out));
}

struct IsomorphismWitness {
    unsigned j = 0;
    RatFunc c;  // a_2 = c^ell a_1^j
};

/// Least j coprime to ell with a_2 / a_1^j an ell-th power, or nothing when
/// the two extensions differ.
inline std::optional<IsomorphismWitness> isomorphic(const ExtensionSpec& s1, const ExtensionSpec& s2) {
    if (!(s1.tower == s2.tower)) fail(ErrorCode::TowerMismatch, "specs live over different towers");
    const unsigned ell = s1.ell();
    for (unsigned j = 1; j < ell; ++j) {
        if (std::gcd(j, ell) != 1) continue;
        const PowerTest t = is_nth_power(s1.tower, s2.a / s1.a.pow(j), ell);
        if (t.is_power) return IsomorphismWitness{j, *t.witness};
    }
    return std::nullopt;
}

}  // namespace cyclicff
