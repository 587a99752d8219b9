#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "orbitlab/admissible.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/formula.hpp"
#include "orbitlab/orbits.hpp"
#include "orbitlab/qseries.hpp"
#include "orbitlab/rational.hpp"
#include "orbitlab/rootsys.hpp"

namespace orbitlab {

// finite + level*Lambda_0 + d_coeff*delta
struct AffineWeight {
    Vec finite;
    Rational level = 0;
    Rational d_coeff = 0;

    friend bool operator==(const AffineWeight&, const AffineWeight&) = default;
    friend auto operator<=>(const AffineWeight& a, const AffineWeight& b) {
        if (a.d_coeff != b.d_coeff) return a.d_coeff < b.d_coeff ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.finite != b.finite) return a.finite < b.finite ? std::strong_ordering::less : std::strong_ordering::greater;
        if (a.level != b.level) return a.level < b.level ? std::strong_ordering::less : std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
};

inline AffineWeight operator+(const AffineWeight& a, const AffineWeight& b) {
    return {a.finite + b.finite, a.level + b.level, a.d_coeff + b.d_coeff};
}
inline AffineWeight operator-(const AffineWeight& a, const AffineWeight& b) {
    return {a.finite - b.finite, a.level - b.level, a.d_coeff - b.d_coeff};
}

inline AffineWeight rho_hat(const RootSystem& rs) { return {rs.rho(), Rational(rs.h_check()), 0}; }

// <lambda, D + x0>
inline Rational pair_D_x0(const RootSystem& rs, const AffineWeight& w, const Vec& x0) {
    return w.d_coeff + rs.form(w.finite, x0);
}

// <lambda, (beta + n delta)^vee>
inline Rational coroot_pairing(const RootSystem& rs, const AffineWeight& w, const AffineRoot& a) {
    const Rational len2 = rs.form(a.finite, a.finite);
    require(len2 != 0, "zero vector is not a root");
    return Rational(2) / len2 * (rs.form(w.finite, a.finite) + Rational(a.n) * w.level);
}

// s_alpha, linear action
inline AffineWeight reflect(const RootSystem& rs, const AffineRoot& a, const AffineWeight& w) {
    const Rational c = coroot_pairing(rs, w, a);
    return {w.finite - c * a.finite, w.level, w.d_coeff - c * Rational(a.n)};
}

inline AffineWeight dot_reflect(const RootSystem& rs, const AffineRoot& a, const AffineWeight& w) {
    const AffineWeight r = rho_hat(rs);
    return reflect(rs, a, w + r) - r;
}

inline AffineWeight level_weight(const AdmissibleLevel& lv) {
    auto rs = shared_root_system(lv.type);
    return {Vec(rs->ambient_dim(), Rational(0)), lv.k, 0};
}

// k Lambda_0 shifted by sum a_i omega_i on the finite part
inline AffineWeight weight_from_labels(const AdmissibleLevel& lv, const std::vector<Int>& labels) {
    auto rs = shared_root_system(lv.type);
    require(static_cast<int>(labels.size()) == rs->rank(),
            "expected " + std::to_string(rs->rank()) + " Dynkin labels, got " + std::to_string(labels.size()));
    std::vector<Rational> vals(rs->rank());
    for (int i = 0; i < rs->rank(); ++i) {
        const Vec& a = rs->simple_roots()[i];
        vals[i] = Rational(labels[i]) * rs->form(a, a) / 2;
    }
    return {rs->coweight_from_simple_values(vals), lv.k, 0};
}

struct WeylElement {
    std::vector<int> word;  // indices into integral_simple_roots, applied left to right
    int parity = 1;
};

struct OrbitTerm {
    AffineWeight weight;    // w o lambda
    AffineWeight shifted;   // w(lambda + rho_hat)
    WeylElement element;
    Rational exponent;      // -<w o lambda, D+x0> + <lambda, D+x0>
};

// Elements w of the integral Weyl group with exponent <= bound, each once, sorted by
// (exponent, weight). Needs <beta, D+x0> >= 0 on every integral simple root.
inline std::vector<OrbitTerm> enumerate_weyl_orbit(const AdmissibleLevel& lv, const AffineWeight& lambda,
                                                   const Vec& x0, const Rational& bound) {
    auto rsp = shared_root_system(lv.type);
    const RootSystem& rs = *rsp;
    require(static_cast<int>(lambda.finite.size()) == rs.ambient_dim(), "weight has the wrong dimension");
    require(lambda.level == lv.k, "weight level " + to_string(lambda.level) + " differs from k = " + to_string(lv.k));
    const auto gens = integral_simple_roots(lv);
    const AffineWeight start = lambda + rho_hat(rs);

    std::vector<Rational> step(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Rational c = coroot_pairing(rs, start, gens[i]);
        require(is_integer(c), "weight is not integral for the integral root system");
        require(c != 0, "weight is not regular (pairing 0 with an integral simple root)");
        require(c > 0, "weight is not dominant for the integral root system");
        step[i] = Rational(gens[i].n) + rs.form(gens[i].finite, x0);
        require(step[i] >= 0, "x0 pairs negatively with an integral simple root; enumeration would not terminate");
    }

    std::vector<OrbitTerm> out;
    std::vector<OrbitTerm> frontier{{lambda, start, {{}, 1}, 0}};
    std::set<AffineWeight> seen{start};
    while (!frontier.empty()) {
        std::vector<OrbitTerm> next;
        for (const auto& t : frontier) {
            for (std::size_t i = 0; i < gens.size(); ++i) {
                const Rational c = coroot_pairing(rs, t.shifted, gens[i]);
                if (c <= 0) continue;  // only length-increasing steps
                const Rational e = t.exponent + c * step[i];
                if (e > bound) continue;
                AffineWeight s = reflect(rs, gens[i], t.shifted);
                if (!seen.insert(s).second) continue;
                OrbitTerm n{s - rho_hat(rs), s, t.element, e};
                n.element.word.push_back(static_cast<int>(i));
                n.element.parity = -t.element.parity;
                next.push_back(std::move(n));
            }
        }
        for (auto& t : frontier) out.push_back(std::move(t));
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const OrbitTerm& a, const OrbitTerm& b) {
        if (a.exponent != b.exponent) return a.exponent < b.exponent;
        return a.weight < b.weight;
    });
    return out;
}

struct DeltaF {
    std::vector<AffineRoot> roots;  // alpha - alpha(x0) delta
    bool equals_Delta0 = true;
};

inline DeltaF delta_f(const AdmissibleLevel& lv, const NilpotentOrbit& f) {
    require(f.type == lv.type, "orbit and level belong to different types");
    auto rs = shared_root_system(lv.type);
    DeltaF out;
    for (const auto& a : rs->roots()) {
        const Rational v = rs->form(a, f.x0);
        if (!is_integer(v)) continue;
        Int mod = lv.q;
        if (lv.family == LevelFamily::Coprincipal && rs->form(a, a) == 2) mod *= rs->r_check();
        if (v.numerator() % mod != 0) continue;
        out.roots.push_back({a, -v.numerator()});
        if (v != 0) out.equals_Delta0 = false;
    }
    return out;
}

// Graded character of H^0(L(lambda)) to order trunc_order above the offset -<lambda, D+x0>.
inline QSeries character_hred(const AdmissibleLevel& lv, const AffineWeight& lambda, const NilpotentOrbit& f,
                              const Rational& trunc_order) {
    require(trunc_order > 0, "truncation order must be positive");
    const Rational t2 = trunc_order * 2;
    require(is_integer(t2), "truncation order must be a multiple of 1/2");
    auto rsp = shared_root_system(lv.type);
    const RootSystem& rs = *rsp;
    const Rational offset = -pair_D_x0(rs, lambda, f.x0);
    QSeries sum(offset, static_cast<int>(t2.numerator()));
    if (!delta_f(lv, f).equals_Delta0) {
        // still reject bad weights
        enumerate_weyl_orbit(lv, lambda, Vec(rs.ambient_dim(), Rational(0)), Rational(0));
        return sum;
    }

    std::vector<Vec> d0plus;
    for (const auto& a : rs.positive_roots())
        if (rs.form(a, f.x0) == 0) d0plus.push_back(a);
    const int n_half = f.graded_dim(1);

    const AffineWeight rh = rho_hat(rs);
    for (const auto& t : enumerate_weyl_orbit(lv, lambda, f.x0, trunc_order)) {
        Rational lead = 1;
        bool keep = true;
        for (const auto& a : d0plus) {
            const Rational num = coroot_pairing(rs, t.shifted, {a, 0});
            if (num <= 0) {
                keep = false;
                break;
            }
            lead *= num / coroot_pairing(rs, rh, {a, 0});
        }
        if (!keep) continue;
        sum.add_term(static_cast<int>((t.exponent * 2).numerator()), Rational(t.element.parity) * lead);
    }
    // every alpha + n delta with alpha in Delta_0 (both signs) survives: dim g_0 factors
    for (int j2 = 2; j2 <= sum.trunc2(); j2 += 2) sum.divide_by_one_minus(j2, f.graded_dim(0));
    for (int j2 = 1; j2 <= sum.trunc2(); j2 += 2) sum.divide_by_one_minus(j2, n_half);
    return sum;
}

inline Rational central_charge(const NilpotentOrbit& f, const Rational& k) {
    auto rsp = shared_root_system(f.type);
    const RootSystem& rs = *rsp;
    const Rational kappa = k + rs.h_check();
    require(kappa != 0, "critical level k = -h^vee has no central charge");
    const Vec v = rs.rho() - kappa * f.x0;
    return Rational(f.graded_dim(0)) - Rational(f.graded_dim(1), 2) - Rational(12) / kappa * rs.form(v, v);
}

// c as a Laurent polynomial in (p, q), kappa = p/q or p/(r^vee q)
inline Laurent central_charge_laurent(const NilpotentOrbit& f, LevelFamily fam) {
    auto rsp = shared_root_system(f.type);
    const RootSystem& rs = *rsp;
    const Rational r = fam == LevelFamily::Principal ? 1 : rs.r_check();
    const Rational rho2 = rs.form(rs.rho(), rs.rho()), x2 = rs.form(f.x0, f.x0);
    const Rational c0 = Rational(f.graded_dim(0)) - Rational(f.graded_dim(1), 2) + 24 * rs.form(rs.rho(), f.x0);
    return Laurent(c0) + Laurent::monomial(-12 * rho2 * r, -1, 1) + Laurent::monomial(-12 * x2 / r, 1, -1);
}

inline Rational principal_charge(const CartanType& t, Int p, Int q) {
    require(p > 0 && q > 0, "p and q must be positive");
    auto rs = shared_root_system(t);
    const Int l = rs->rank(), h = rs->h(), hv = rs->h_check(), rL = rs->r_check() * rs->Lh_check();
    return Rational(-l * ((h + 1) * p - hv * q) * (rL * p - (h + 1) * q), p * q);
}

// Boundary admissible level of each family at which the reduction is trivial.
inline AdmissibleLevel boundary_level(const CartanType& t, LevelFamily fam) {
    auto rs = shared_root_system(t);
    if (fam == LevelFamily::Principal) return make_level(t, fam, rs->h_check(), rs->h() + 1);
    return make_level(t, fam, rs->h() + 1, rs->Lh_check());
}

struct DenominatorCheck {
    AdmissibleLevel level;
    QSeries product;     // prod (1-q^j)^l
    QSeries weyl_sum;    // sum over the integral Weyl group
    bool agree = false;
};

inline DenominatorCheck denominator_identity(const CartanType& t, LevelFamily fam, int trunc_order) {
    require(trunc_order > 0, "truncation order must be positive");
    auto rsp = shared_root_system(t);
    const RootSystem& rs = *rsp;
    DenominatorCheck out{boundary_level(t, fam), QSeries::one(2 * trunc_order), QSeries(0, 2 * trunc_order)};
    for (int j = 1; j <= trunc_order; ++j) out.product.multiply_by_one_minus(2 * j, rs.rank());
    for (const auto& term : enumerate_weyl_orbit(out.level, level_weight(out.level), rs.rho_check(), trunc_order))
        out.weyl_sum.add_term(static_cast<int>((term.exponent * 2).numerator()), term.element.parity);
    out.agree = out.product == out.weyl_sum;
    return out;
}

inline bool denominator_identity_check(const CartanType& t, LevelFamily fam, int trunc_order) {
    return denominator_identity(t, fam, trunc_order).agree;
}

}  // namespace orbitlab
