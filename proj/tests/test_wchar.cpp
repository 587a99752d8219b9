#include <gtest/gtest.h>

#include <random>

#include "orbitlab/formula.hpp"
#include "orbitlab/qseries.hpp"
#include "orbitlab/wchar.hpp"
#include "oracle/a1_lattice.hpp"

using namespace orbitlab;

namespace {

Rational R(Int a, Int b = 1) { return Rational(a, b); }

const AdmissibleLevel& a1_half() {
    static const AdmissibleLevel lv = require_admissible(parse_type("A1"), R(-1, 2));
    return lv;
}

std::vector<CartanType> charge_types() {
    std::vector<CartanType> out;
    for (const char* s : {"A1", "A2", "A3", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "G2", "F4", "E6", "E7", "E8"})
        out.push_back(parse_type(s));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// QSeries

TEST(QSeries, ProductsAndInverse) {
    QSeries one_minus_q = QSeries::one(20);
    one_minus_q.multiply_by_one_minus(2);
    const QSeries geo = one_minus_q.inverse();
    for (int n = 0; n <= 20; n += 2) EXPECT_EQ(geo.coeff2(n), 1);
    for (int n = 1; n <= 20; n += 2) EXPECT_EQ(geo.coeff2(n), 0);
    EXPECT_EQ(one_minus_q * geo, QSeries::one(20));

    QSeries d = QSeries::one(20);
    d.divide_by_one_minus(2);
    EXPECT_EQ(d, geo);

    // Euler: prod (1-q^j) = sum (-1)^m q^{m(3m-1)/2}
    QSeries e = QSeries::one(60);
    for (int j = 1; j <= 30; ++j) e.multiply_by_one_minus(2 * j);
    QSeries pent(0, 60);
    for (int m = -10; m <= 10; ++m) {
        const int ex = m * (3 * m - 1) / 2;
        if (2 * ex <= 60) pent.add_term(2 * ex, m % 2 == 0 ? 1 : -1);
    }
    EXPECT_EQ(e, pent);

    // partition numbers from 1/prod
    QSeries p = QSeries::one(40);
    for (int j = 1; j <= 20; ++j) p.divide_by_one_minus(2 * j);
    const std::vector<int> pn{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176, 231, 297, 385, 490, 627};
    for (int n = 0; n <= 20; ++n) EXPECT_EQ(p.coeff(n), pn[n]);
}

TEST(QSeries, TruncationAndOffsets) {
    QSeries a(R(1, 2), 4);
    a.add_term(0, 1);
    a.add_term(3, R(1, 3));
    a.add_term(5, 7);  // beyond the order: dropped
    EXPECT_EQ(a.terms().size(), 2u);
    EXPECT_EQ(a.coeff(R(3, 2)), R(1, 3));
    EXPECT_THROW(a.coeff(R(1, 3)), DomainError);
    EXPECT_THROW(a.add_term(-1, 1), DomainError);
    QSeries b(R(1, 2), 2);
    b.add_term(1, 1);
    QSeries c = a;
    c += b;
    EXPECT_EQ(c.trunc2(), 2);
    EXPECT_EQ(c.coeff2(3), 0);
    EXPECT_EQ(c.coeff2(1), 1);
    EXPECT_THROW(c += QSeries(0, 2), DomainError);
    EXPECT_EQ((a * b).offset(), 1);
    EXPECT_EQ(a.str(), "q^(1/2) * (1 + (1/3)q^(3/2) + O(q^(5/2)))");
    EXPECT_EQ(QSeries(0, 4).str(), "O(q^(5/2))");
    EXPECT_THROW(QSeries(0, 4).inverse(), DomainError);
}

// ---------------------------------------------------------------------------
// Laurent formulas

TEST(Formula, ParseAndCompare) {
    const Laurent g2 = parse_formula("-2(12p-7q)(7p-4q)/(pq)");
    EXPECT_EQ(g2, parse_formula("-168p/q + 194 - 56q/p"));
    EXPECT_EQ(g2.str(), "-168p/q + 194 - 56q/p");
    EXPECT_EQ(parse_formula("9/5(-16p+655-6650/p)").eval(7, 1), R(9, 5) * (R(-112) + 655 - R(950)));
    EXPECT_EQ(parse_formula("-40(p-36)(p-31)/p").substitute_q(6), parse_formula("-40(p-36)(p-31)/p"));
    EXPECT_EQ(parse_formula("p^2/p"), parse_formula("p"));
    EXPECT_EQ(parse_formula("-(144/5)p").str(), "-(144/5)p");
    EXPECT_THROW(parse_formula("1/(p+1)"), DomainError);
    EXPECT_THROW(parse_formula("2x"), DomainError);
    EXPECT_THROW(parse_formula("(p"), DomainError);
}

// ---------------------------------------------------------------------------
// dot action and enumeration

TEST(Wchar, DotReflectExamples) {
    const auto& lv = a1_half();
    auto rs = shared_root_system(lv.type);
    const AffineWeight lam = level_weight(lv);
    const AffineRoot a1{rs->simple_roots()[0], 0};
    const AffineWeight s = dot_reflect(*rs, a1, lam);
    EXPECT_EQ(s.finite, -rs->simple_roots()[0]);
    EXPECT_EQ(s.level, lv.k);
    EXPECT_EQ(dot_reflect(*rs, a1, s), lam);

    const AffineRoot a0{-rs->theta(), 2};
    const AffineWeight mu = dot_reflect(*rs, a0, lam);
    // Lambda + rho_hat pairs to 2 with (-theta + 2 delta)^vee
    EXPECT_EQ(mu.finite, Rational(2) * rs->theta());
    EXPECT_EQ(mu.d_coeff, -4);
    EXPECT_EQ(pair_D_x0(*rs, mu, rs->rho_check()), -2);
    EXPECT_EQ(dot_reflect(*rs, a0, mu), lam);
}

TEST(Wchar, EnumerationBasics) {
    const auto& lv = a1_half();
    auto rs = shared_root_system(lv.type);
    const auto lam = level_weight(lv);
    const auto only = enumerate_weyl_orbit(lv, lam, rs->rho_check(), 0);
    ASSERT_EQ(only.size(), 1u);
    EXPECT_EQ(only[0].element.parity, 1);
    EXPECT_TRUE(only[0].element.word.empty());
    for (const auto& t : enumerate_weyl_orbit(lv, lam, rs->rho_check(), 30)) {
        if (t.element.word.size() == 1) EXPECT_EQ(t.element.parity, -1);
        EXPECT_EQ(t.element.parity, t.element.word.size() % 2 ? -1 : 1);
        EXPECT_GE(t.exponent, 0);
    }
    AffineWeight bad = lam;
    bad.finite = Rational(-1, 2) * rs->simple_roots()[0];  // lambda + rho pairs to 0 with alpha_1
    EXPECT_THROW(enumerate_weyl_orbit(lv, bad, rs->rho_check(), 5), DomainError);
}

TEST(Wchar, EnumerationAgreesWithA1Lattice) {
    for (auto [k, c] : std::vector<std::pair<Rational, int>>{{R(-1, 2), 1}, {R(-4, 3), 1}, {R(-1, 2), 0}, {R(1), 1}, {R(-2) + R(7, 5), 1}}) {
        const auto lv = require_admissible(parse_type("A1"), k);
        auto rs = shared_root_system(lv.type);
        const Vec x0 = Rational(c, 2) * rs->simple_roots()[0];
        for (int a = 0; a <= 1; ++a) {
            AffineWeight lam = level_weight(lv);
            lam.finite = Rational(a, 2) * rs->simple_roots()[0];
            if (c == 0 && a == 0) continue;
            // lambda + rho_hat must stay regular against -alpha + q delta
            if (Rational(a + 1) >= lv.kappa() * Rational(lv.q)) continue;
            const Rational bound = 30;
            std::multiset<std::pair<Rational, int>> bfs, lat;
            for (const auto& t : enumerate_weyl_orbit(lv, lam, x0, bound)) bfs.insert({t.exponent, t.element.parity});
            for (const auto& t : wchar_oracle::a1_lattice_terms(lv, a + 1, c, bound)) lat.insert({t.exponent, t.parity});
            EXPECT_EQ(bfs, lat) << "k=" << to_string(k) << " c=" << c << " a=" << a;
        }
    }
}

// ---------------------------------------------------------------------------
// characters

TEST(Wchar, CharacterA1PrincipalMatchesLattice) {
    for (const Rational& k : {R(-1, 2), R(-4, 3), R(-2) + R(7, 5), R(-2) + R(5, 3)}) {
        const auto lv = require_admissible(parse_type("A1"), k);
        const auto& cat = *shared_catalog(lv.type);
        const auto s = character_hred(lv, level_weight(lv), cat.principal(), 20);
        const auto want = wchar_oracle::a1_character(lv, 1, 1, 20);
        EXPECT_EQ(s, want) << to_string(k) << ": " << s.str() << " vs " << want.str();
        EXPECT_EQ(s.offset(), 0);
        EXPECT_EQ(s.coeff2(0), 1);  // empty Delta_{0,+}
    }
    // (p, q) = (3, 2) and (2, 3): trivial W-algebra
    for (const Rational& k : {R(-1, 2), R(-4, 3)}) {
        const auto lv = require_admissible(parse_type("A1"), k);
        EXPECT_EQ(character_hred(lv, level_weight(lv), shared_catalog(lv.type)->principal(), 20), QSeries::one(40));
    }
}

TEST(Wchar, CharacterA1ZeroOrbitMatchesLattice) {
    for (const Rational& k : {R(-1, 2), R(1), R(-2) + R(7, 3)}) {
        const auto lv = require_admissible(parse_type("A1"), k);
        const auto& cat = *shared_catalog(lv.type);
        const auto s = character_hred(lv, level_weight(lv), cat.zero(), 12);
        EXPECT_EQ(s, wchar_oracle::a1_character(lv, 1, 0, 12)) << to_string(k);
    }
    // integrable k = 1: basic sl2 module graded by L_0, dims 1, 3, 4, 7, ...
    const auto lv = require_admissible(parse_type("A1"), R(1));
    const auto s = character_hred(lv, level_weight(lv), shared_catalog(lv.type)->zero(), 4);
    const std::vector<int> want{1, 3, 4, 7, 13};
    for (int n = 0; n <= 4; ++n) EXPECT_EQ(s.coeff(n), want[n]);
}

TEST(Wchar, LeadingCoefficientIsDelta0Product) {
    struct Case {
        const char* type;
        Rational k;
        const char* orbit;
        std::vector<Int> labels;
    };
    const std::vector<Case> cases{
        {"A2", R(-3) + R(5, 2), "0", {1, 0}},
        {"A2", R(-3) + R(7, 2), "0", {1, 1}},
        {"A3", R(-4) + R(9, 2), "2,2", {1, 0, 1}},
        {"A3", R(-4) + R(9, 2), "2,2", {0, 0, 0}},
        {"C2", R(-3) + R(7, 3), "2,1,1", {0, 1}},
        {"G2", R(-4) + R(7, 2), "~A1", {0, 0}},
    };
    for (const auto& c : cases) {
        const auto t = parse_type(c.type);
        const auto lv = require_admissible(t, c.k);
        const auto& cat = *shared_catalog(t);
        const auto& rs = cat.root_system();
        const auto& f = cat.find(c.orbit);
        const auto lam = weight_from_labels(lv, c.labels);
        ASSERT_TRUE(hred_nonzero(lv, f));
        const auto s = character_hred(lv, lam, f, 3);
        Rational prod = 1;
        const auto shifted = lam + rho_hat(rs);
        for (const auto& a : rs.positive_roots())
            if (rs.form(a, f.x0) == 0) prod *= coroot_pairing(rs, shifted, {a, 0}) / coroot_pairing(rs, rho_hat(rs), {a, 0});
        EXPECT_EQ(s.coeff2(0), prod) << c.type << " " << c.orbit;
        EXPECT_EQ(s.offset(), -pair_D_x0(rs, lam, f.x0));
    }
    // Weyl dimension of the 3-dimensional representation for the zero orbit
    const auto lv = require_admissible(parse_type("A2"), R(-3) + R(5, 2));
    EXPECT_EQ(character_hred(lv, weight_from_labels(lv, {1, 0}), shared_catalog(lv.type)->zero(), 2).coeff2(0), 3);
}

TEST(Wchar, CharacterErrors) {
    const auto& lv = a1_half();
    const auto& f = shared_catalog(lv.type)->principal();
    EXPECT_THROW(character_hred(lv, level_weight(lv), f, 0), DomainError);
    EXPECT_THROW(character_hred(lv, level_weight(lv), f, R(1, 3)), DomainError);
    EXPECT_THROW(weight_from_labels(lv, {1, 2}), DomainError);
}

TEST(Wchar, DeltaF) {
    // principal orbit with q >= h: nothing on either side
    const auto& a1 = *shared_catalog(parse_type("A1"));
    auto d = delta_f(a1_half(), a1.principal());
    EXPECT_TRUE(d.equals_Delta0);
    EXPECT_TRUE(d.roots.empty());
    // zero orbit: every root, all with alpha(x0) = 0
    d = delta_f(a1_half(), a1.zero());
    EXPECT_TRUE(d.equals_Delta0);
    EXPECT_EQ(d.roots.size(), 2u);

    const auto& g2 = *shared_catalog(parse_type("G2"));
    const auto& rs = g2.root_system();
    const auto lv = require_admissible(parse_type("G2"), R(-4) + R(5, 2));
    for (const auto& f : g2.orbits()) {
        int direct = 0, zero = 0;
        for (const auto& a : rs.roots()) {
            const Rational v = rs.form(a, f.x0);
            direct += is_integer(v) && v.numerator() % 2 == 0;
            zero += v == 0;
        }
        const auto df = delta_f(lv, f);
        EXPECT_EQ(static_cast<int>(df.roots.size()), direct) << f.label;
        EXPECT_EQ(df.equals_Delta0, direct == zero) << f.label;
        EXPECT_EQ(df.equals_Delta0, hred_nonzero(lv, f)) << f.label;
    }
}

TEST(Wchar, ZeroSeriesIffLargeHeight) {
    for (const char* name : {"A1", "A2", "A3", "C2", "G2"}) {
        const auto t = parse_type(name);
        const auto& cat = *shared_catalog(t);
        const auto& rs = cat.root_system();
        const int qmax = t.family == Family::G ? 8 : rs.h() + 2;
        for (auto fam : {LevelFamily::Principal, LevelFamily::Coprincipal}) {
            if (fam == LevelFamily::Coprincipal && rs.r_check() == 1) continue;
            for (Int q = 1; q <= qmax; ++q) {
                if (fam == LevelFamily::Principal && std::gcd(q, Int(rs.r_check())) != 1) continue;
                Int p = fam == LevelFamily::Principal ? rs.h_check() : rs.h();
                while (std::gcd(p, q) != 1 || std::gcd(p, Int(rs.r_check())) != 1) ++p;
                const auto lv = make_level(t, fam, p, q);
                for (const auto& f : cat.orbits()) {
                    const auto s = character_hred(lv, level_weight(lv), f, 4);
                    SCOPED_TRACE(std::string(name) + " " + family_name(fam) + " q=" + std::to_string(q) + " " + f.label);
                    EXPECT_EQ(s.is_zero(), !hred_nonzero(lv, f));
                    for (const auto& [n, c] : s.terms()) {
                        EXPECT_TRUE(is_integer(c)) << s.str();
                        EXPECT_GT(c, 0) << s.str();
                    }
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// central charges

TEST(Wchar, CentralChargeExamples) {
    const auto& g2 = *shared_catalog(parse_type("G2"));
    const auto& e8 = *shared_catalog(parse_type("E8"));
    const auto& f4 = *shared_catalog(parse_type("F4"));
    const Laurent g2f = parse_formula("-2(12p-7q)(7p-4q)/(pq)");
    const Laurent e8f = parse_formula("-40(p-36)(p-31)/p");
    const Laurent f4f = parse_formula("562-21p-3744/p");
    for (Int p = 4; p <= 30; ++p)
        for (Int q = 1; q <= 9; ++q) {
            if (std::gcd(p, q) != 1) continue;
            EXPECT_EQ(central_charge(g2.principal(), R(-4) + R(p, q)), g2f.eval(p, q));
        }
    for (Int p : {31, 37, 41, 43, 47}) EXPECT_EQ(central_charge(e8.find("E8(a7)"), R(-30) + R(p, 6)), e8f.eval(p, 6));
    EXPECT_EQ(central_charge(e8.find("E8(a7)"), R(-30) + R(37, 6)), R(-240, 37));
    for (Int p : {13, 15, 17, 19, 21}) EXPECT_EQ(central_charge(f4.find("B3"), R(-9) + R(p, 8)), f4f.eval(p, 4));
    EXPECT_EQ(central_charge_laurent(f4.find("B3"), LevelFamily::Coprincipal).substitute_q(4), f4f);
    EXPECT_EQ(central_charge_laurent(g2.principal(), LevelFamily::Principal), g2f);
    EXPECT_THROW(central_charge(g2.principal(), R(-4)), DomainError);
    // zero orbit: Sugawara value k dim g / (k + h^vee)
    EXPECT_EQ(central_charge(g2.zero(), R(1)), R(14, 5));
}

TEST(Wchar, PrincipalChargeFormula) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<Int> dist(1, 60);
    for (const auto& t : charge_types()) {
        const auto& cat = *shared_catalog(t);
        const auto& rs = cat.root_system();
        int done = 0;
        while (done < 50) {
            const Int p = dist(rng), q = dist(rng);
            if (std::gcd(p, q) != 1) continue;
            ++done;
            EXPECT_EQ(principal_charge(t, p, q), central_charge(cat.principal(), R(-rs.h_check()) + R(p, q))) << t.name();
        }
        EXPECT_EQ(principal_charge(t, 1, 1), central_charge(cat.principal(), R(-rs.h_check() + 1)));
    }
    // A1 at (3,2) and (2,3): c = 0; (4,3) gives the Ising value
    EXPECT_EQ(principal_charge(parse_type("A1"), 3, 2), 0);
    EXPECT_EQ(principal_charge(parse_type("A1"), 2, 3), 0);
    EXPECT_EQ(principal_charge(parse_type("A1"), 4, 3), R(1, 2));
    EXPECT_EQ(principal_charge(parse_type("A1"), 3, 4), R(1, 2));
    EXPECT_THROW(principal_charge(parse_type("A1"), 0, 1), DomainError);
}

// ---------------------------------------------------------------------------
// denominator identity

TEST(Wchar, DenominatorIdentity) {
    EXPECT_EQ(boundary_level(parse_type("G2"), LevelFamily::Coprincipal).k, R(-4) + R(7, 12));
    EXPECT_TRUE(denominator_identity_check(parse_type("A1"), LevelFamily::Principal, 30));
    EXPECT_TRUE(denominator_identity_check(parse_type("A2"), LevelFamily::Principal, 20));
    EXPECT_TRUE(denominator_identity_check(parse_type("G2"), LevelFamily::Coprincipal, 15));
    EXPECT_TRUE(denominator_identity_check(parse_type("C2"), LevelFamily::Principal, 15));
    EXPECT_TRUE(denominator_identity_check(parse_type("C2"), LevelFamily::Coprincipal, 15));
    EXPECT_TRUE(denominator_identity_check(parse_type("G2"), LevelFamily::Principal, 15));
    EXPECT_TRUE(denominator_identity_check(parse_type("B3"), LevelFamily::Principal, 8));
    // the reduction at the boundary level is trivial: character 1, c = 0
    for (const char* n : {"A1", "A2", "C2", "G2"}) {
        const auto t = parse_type(n);
        const auto lv = boundary_level(t, LevelFamily::Principal);
        const auto& cat = *shared_catalog(t);
        EXPECT_EQ(central_charge(cat.principal(), lv.k), 0) << n;
        EXPECT_EQ(character_hred(lv, level_weight(lv), cat.principal(), 8), QSeries::one(16)) << n;
    }
}
