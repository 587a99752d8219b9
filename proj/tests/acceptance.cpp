// Runs the eight acceptance checks and prints one line per check.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "oracle/a1_lattice.hpp"
#include "orbitlab/adjoint.hpp"
#include "orbitlab/commands.hpp"

using namespace orbitlab;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void fail(const std::string& why) {
        pass = false;
        if (notes.size() < 12) notes.push_back(why);
    }
};

std::vector<CartanType> classical_range() {
    std::vector<CartanType> out;
    for (int r = 1; r <= 7; ++r) out.push_back(parse_type("A", r));
    for (int r = 2; r <= 6; ++r) out.push_back(parse_type("B", r));
    for (int r = 2; r <= 6; ++r) out.push_back(parse_type("C", r));
    for (int r = 3; r <= 6; ++r) out.push_back(parse_type("D", r));
    return out;
}

const std::vector<CartanType>& exceptional_types() {
    static const std::vector<CartanType> v{parse_type("G2"), parse_type("F4"), parse_type("E6"), parse_type("E7"), parse_type("E8")};
    return v;
}

void add_diffs(Outcome& o, const TableReport& rep, const std::set<std::string>& kinds) {
    for (const auto& d : rep.diffs)
        if (kinds.count(d.kind)) o.fail(d.table + " " + d.where + ": expected " + d.expected + ", got " + d.actual);
}

Outcome coxeter_numbers() {
    Outcome o;
    auto types = classical_range();
    for (const auto& t : exceptional_types()) types.push_back(t);
    for (const auto& t : types) {
        const auto rs = build_root_system(t);
        const auto g = golden_coxeter(t);
        if (g.h != rs.h() || g.h_check != rs.h_check() || g.Lh_check != rs.Lh_check() || g.r_check != rs.r_check())
            o.fail(t.name());
    }
    return o;
}

Outcome exceptional_oq_tables() {
    Outcome o;
    for (const auto& t : exceptional_types()) add_diffs(o, check_exceptional_tables(t), {"orbit", "coverage"});
    return o;
}

Outcome classical_families() {
    Outcome o;
    for (const auto& t : classical_range()) add_diffs(o, check_classical_tables(t), {"orbit", "coverage"});
    return o;
}

Outcome central_charges() {
    Outcome o;
    for (const auto& t : exceptional_types()) add_diffs(o, check_exceptional_tables(t), {"charge"});
    std::mt19937_64 rng(2024);
    auto types = classical_range();
    for (const auto& t : exceptional_types()) types.push_back(t);
    for (const auto& t : types) {
        const auto& cat = *shared_catalog(t);
        const auto& rs = cat.root_system();
        int done = 0;
        while (done < 50) {
            const Int p = 1 + static_cast<Int>(rng() % 60), q = 1 + static_cast<Int>(rng() % 40);
            if (std::gcd(p, q) != 1) continue;
            const Rational k = Rational(-rs.h_check()) + Rational(p, q);
            if (principal_charge(t, p, q) != central_charge(cat.principal(), k))
                o.fail(t.name() + " p=" + std::to_string(p) + " q=" + std::to_string(q));
            ++done;
        }
    }
    return o;
}

Outcome exceptional_flags() {
    Outcome o;
    for (const auto& t : classical_range()) add_diffs(o, check_classical_tables(t), {"exceptional"});
    for (const auto& t : exceptional_types()) add_diffs(o, check_exceptional_tables(t), {"exceptional"});
    auto types = classical_range();
    for (const auto& t : exceptional_types()) types.push_back(t);
    for (const auto& t : types) {
        const auto& cat = *shared_catalog(t);
        for (int q = 1; q <= cat.root_system().h() + 2; ++q)
            for (const auto& f : cat.orbits())
                if (is_exceptional_pair(cat, q, f) && compute_Oq(cat, q).marks != f.marks)
                    o.fail(t.name() + " q=" + std::to_string(q) + " " + f.label + " exceptional but not O_q");
    }
    return o;
}

int closed_height(Family X, const Partition& d, bool co) {
    const int d1 = d[0], d2 = d[1];
    const int so = d2 >= d1 - 1 ? d1 + d2 - 2 : 2 * (d1 - 2);
    if (X == Family::A) return 2 * (d1 - 1);
    if (X == Family::C) return co ? so : 2 * (d1 - 1);
    if (X == Family::B && co) return d1 - 1;
    return so;
}

Outcome heights() {
    Outcome o;
    for (Family X : {Family::A, Family::B, Family::C, Family::D}) {
        for (int r = 1; r <= 8; ++r) {
            CartanType t;
            try {
                t = make_type(X, r);
            } catch (const DomainError&) {
                continue;
            }
            const auto& cat = *shared_catalog(t);
            const int N = natural_dim(X, r);
            for (const auto& f : cat.orbits()) {
                const Partition& d = f.classical->partition;
                if (height(f) != closed_height(X, d, false) || coheight(f) != closed_height(X, d, true))
                    o.fail(t.name() + " " + f.label + " closed form");
                if (N <= 10 && ad_nilpotency_index(X, d) != height(f) + 1) o.fail(t.name() + " " + f.label + " nilpotency");
            }
        }
    }
    return o;
}

Outcome denominator() {
    Outcome o;
    const std::vector<std::tuple<const char*, LevelFamily, int>> cases{
        {"A1", LevelFamily::Principal, 30}, {"A2", LevelFamily::Principal, 30}, {"C2", LevelFamily::Principal, 15},
        {"C2", LevelFamily::Coprincipal, 15}, {"G2", LevelFamily::Principal, 15}, {"G2", LevelFamily::Coprincipal, 15}};
    for (const auto& [t, fam, n] : cases)
        if (!denominator_identity_check(parse_type(t), fam, n)) o.fail(std::string(t) + " " + family_name(fam));
    return o;
}

Outcome characters() {
    Outcome o;
    for (const Rational& k : {Rational(-1, 2), Rational(-4, 3)}) {
        const auto lv = require_admissible(parse_type("A1"), k);
        const auto& cat = *shared_catalog(lv.type);
        const QSeries s = character_hred(lv, level_weight(lv), cat.principal(), 20);
        if (!(s == wchar_oracle::a1_character(lv, 1, 1, 20))) o.fail("A1 k=" + to_string(k) + " differs from lattice sum");
        if (s.offset() != 0 || s.coeff2(0) != 1) o.fail("A1 k=" + to_string(k) + " leading coefficient");
    }
    const auto& g2 = *shared_catalog(parse_type("G2"));
    for (auto fam : {LevelFamily::Principal, LevelFamily::Coprincipal})
        for (Int q = 1; q <= 8; ++q) {
            if (fam == LevelFamily::Principal && q % 3 == 0) continue;
            Int p = fam == LevelFamily::Principal ? 4 : 6;
            while (std::gcd(p, q) != 1 || (fam == LevelFamily::Coprincipal && p % 3 == 0)) ++p;
            const auto lv = make_level(parse_type("G2"), fam, p, q);
            for (const auto& f : g2.orbits()) {
                const QSeries s = character_hred(lv, level_weight(lv), f, 3);
                const int h = fam == LevelFamily::Principal ? f.ht : f.ht_check;
                const std::string where = std::string(family_name(fam)) + " q=" + std::to_string(q) + " " + f.label;
                if (s.is_zero() != (h >= 2 * q)) o.fail(where + " vanishing");
                if (!s.is_zero() && s.coeff2(0) != 1) o.fail(where + " leading coefficient");
            }
        }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> checks{
        {"1 Coxeter numbers", coxeter_numbers},
        {"2 exceptional O_q tables", exceptional_oq_tables},
        {"3 classical O_q families", classical_families},
        {"4 central charges", central_charges},
        {"5 exceptional flags", exceptional_flags},
        {"6 heights vs nilpotency", heights},
        {"7 denominator identity", denominator},
        {"8 character consistency", characters}};
    int failed = 0;
    for (const auto& [name, fn] : checks) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs);
        for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
        failed += !o.pass;
    }
    std::printf("%d of %zu criteria pass\n", static_cast<int>(checks.size()) - failed, checks.size());
    return failed ? 1 : 0;
}
