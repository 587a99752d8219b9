#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "orbitlab/errors.hpp"
#include "orbitlab/orbits.hpp"
#include "orbitlab/rational.hpp"
#include "orbitlab/rootsys.hpp"

namespace orbitlab {

enum class LevelFamily { Principal, Coprincipal };

inline std::string family_name(LevelFamily f) { return f == LevelFamily::Principal ? "principal" : "coprincipal"; }

inline LevelFamily parse_level_family(std::string_view s) {
    if (s == "principal" || s == "p") return LevelFamily::Principal;
    if (s == "coprincipal" || s == "co" || s == "c") return LevelFamily::Coprincipal;
    throw DomainError("unknown level family '" + std::string(s) + "' (principal or coprincipal)");
}

// k = -h^vee + p/q (principal) or k = -h^vee + p/(r^vee q) (coprincipal).
struct AdmissibleLevel {
    CartanType type;
    Rational k;
    LevelFamily family = LevelFamily::Principal;
    Int p = 0;
    Int q = 0;
    bool degenerate = false;

    Rational kappa() const { return k + shared_root_system(type)->h_check(); }
};

inline Rational level_from(const RootSystem& rs, LevelFamily f, Int p, Int q) {
    require(p > 0 && q > 0, "p and q must be positive");
    const Int den = f == LevelFamily::Principal ? q : rs.r_check() * q;
    return Rational(-rs.h_check()) + Rational(p, den);
}

// Normal form of an admissible level, or nullopt when k is not admissible.
inline std::optional<AdmissibleLevel> classify_level(const CartanType& t, const Rational& k) {
    auto rs = shared_root_system(t);
    const Rational kappa = k + rs->h_check();
    const Int a = kappa.numerator(), b = kappa.denominator();
    const Int r = rs->r_check();
    if (a <= 0) return std::nullopt;
    AdmissibleLevel lv{t, k};
    lv.p = a;
    if (std::gcd(b, r) == 1) {
        if (a < rs->h_check()) return std::nullopt;
        lv.family = LevelFamily::Principal;
        lv.q = b;
        lv.degenerate = lv.q < rs->h();
        return lv;
    }
    if (b % r == 0) {
        if (a < rs->h()) return std::nullopt;
        lv.family = LevelFamily::Coprincipal;
        lv.q = b / r;
        lv.degenerate = lv.q < rs->Lh_check();
        return lv;
    }
    return std::nullopt;
}

inline AdmissibleLevel require_admissible(const CartanType& t, const Rational& k) {
    auto lv = classify_level(t, k);
    require(lv.has_value(), "k = " + to_string(k) + " is not an admissible level for " + t.name());
    return *lv;
}

inline AdmissibleLevel make_level(const CartanType& t, LevelFamily f, Int p, Int q) {
    auto rs = shared_root_system(t);
    Rational k = level_from(*rs, f, p, q);
    auto lv = require_admissible(t, k);
    require(lv.family == f && lv.q == q && lv.p == p,
            "(p, q) = (" + std::to_string(p) + ", " + std::to_string(q) + ") is not in normal form for the " +
                family_name(f) + " family of " + t.name());
    return lv;
}

// A real affine root beta + n delta.
struct AffineRoot {
    Vec finite;
    Int n = 0;
};

inline std::vector<AffineRoot> integral_simple_roots(const AdmissibleLevel& lv) {
    auto rs = shared_root_system(lv.type);
    std::vector<AffineRoot> out;
    const Vec& top = lv.family == LevelFamily::Principal ? rs->theta() : rs->theta_s();
    out.push_back({-top, lv.q});
    for (const auto& a : rs->simple_roots()) out.push_back({a, 0});
    return out;
}

struct LevelOrbit {
    const NilpotentOrbit* orbit = nullptr;
    bool non_degenerate = false;
};

// O[k]: O_q or ^L O_q by family; the principal orbit (flagged) for non-degenerate levels.
inline LevelOrbit orbit_of_level(const AdmissibleLevel& lv, const OrbitCatalog& cat) {
    require(cat.type() == lv.type, "catalog type " + cat.type().name() + " does not match level type " + lv.type.name());
    if (!lv.degenerate) return {&cat.principal(), true};
    const auto& o = lv.family == LevelFamily::Principal ? compute_Oq(cat, static_cast<int>(lv.q))
                                                        : compute_LOq(cat, static_cast<int>(lv.q));
    return {&o, false};
}

inline bool hred_nonzero(const AdmissibleLevel& lv, const NilpotentOrbit& f) {
    require(f.type == lv.type, "orbit and level belong to different types");
    const int h = lv.family == LevelFamily::Principal ? f.ht : f.ht_check;
    return h < 2 * lv.q;
}

enum class VarietyKind { OrbitClosure, ContainsNullcone };

struct VarietyDescriptor {
    VarietyKind kind = VarietyKind::OrbitClosure;
    const NilpotentOrbit* orbit = nullptr;  // set for OrbitClosure
    bool conjecturally_equal = false;       // ContainsNullcone: equality with the nilpotent cone is expected
};

inline VarietyDescriptor associated_variety(const AdmissibleLevel& lv, const OrbitCatalog& cat) {
    auto o = orbit_of_level(lv, cat);
    if (o.non_degenerate) return {VarietyKind::ContainsNullcone, nullptr, true};
    return {VarietyKind::OrbitClosure, o.orbit, false};
}

inline bool is_c2_cofinite(const AdmissibleLevel& lv, const OrbitCatalog& cat, const NilpotentOrbit& f) {
    require(lv.degenerate, "C2-cofiniteness criterion needs a degenerate level; k = " + to_string(lv.k) +
                               " has q = " + std::to_string(lv.q));
    require(f.type == lv.type, "orbit and level belong to different types");
    const NilpotentOrbit* o = orbit_of_level(lv, cat).orbit;
    return o->marks == f.marks && o->label == f.label;
}

}  // namespace orbitlab
