#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "orbitlab/admissible.hpp"
#include "orbitlab/errors.hpp"
#include "orbitlab/exceptional.hpp"
#include "orbitlab/formula.hpp"
#include "orbitlab/orbits.hpp"
#include "orbitlab/partitions.hpp"
#include "orbitlab/rootsys.hpp"
#include "orbitlab/wchar.hpp"

namespace orbitlab {

// ---------------------------------------------------------------------------
// Golden copies. Labels in ASCII: '~' for a tilde, "(a1)" for subscripts.
// q column: ">=N" open-ended, "(N)" marks q with gcd(q, r^vee) > 1 (O_q still defined,
// no admissible level of that family). Charge formulas use kappa = p/q (principal) or
// p/(r^vee q) (coprincipal); a formula without q belongs to the single unbracketed q of its row.

inline constexpr std::string_view kGoldenCoxeter = R"(
# family|h|h_check|Lh_check|r_check   (l = rank)
A|l+1|l+1|l+1|1
B|2l|2l-1|l+1|2
C|2l|l+1|2l-1|2
D|2l-2|2l-2|2l-2|1
E6|12|12|12|1
E7|18|18|18|1
E8|30|30|30|1
F4|12|9|9|2
G2|6|4|4|3
)";

inline constexpr std::string_view kGoldenExceptional = R"(
# type|family|q|orbit|exceptional|charge
G2|principal|>=6|G2|yes|-2(12p-7q)(7p-4q)/(pq)
G2|principal|(3),4,5|G2(a1)|no|-4(6p-7q)(p-2q)/(pq)
G2|principal|2|~A1|yes|63-9p-112/p
G2|principal|1|0|yes|14(p-4)/p
G2|coprincipal|>=4|G2|-|-2(7p-12q)(4p-7q)/(pq)
G2|coprincipal|2,3|G2(a1)|-|-4(2p-7q)(p-6q)/(pq)
G2|coprincipal|1|A1|-|-2(p-12)(p-7)/p
F4|principal|>=12|F4|yes|-4(18p-13q)(13p-9q)/(pq)
F4|principal|(8),9,(10),11|F4(a1)|no|1062-600p/q-468q/p
F4|principal|(6),7|F4(a2)|no|632-216p/7-3276/p
F4|principal|(4),5|F4(a3)|no|-12(p-15)(6p-65)/(5p)
F4|principal|3|~A2+A1|yes|316-18p-1404/p
F4|principal|(2)|A1+~A1|yes|
F4|principal|1|0|yes|52(p-9)/p
F4|coprincipal|>=9|F4|-|-4(13p-18q)(9p-13q)/(pq)
F4|coprincipal|6,7,8|F4(a1)|-|1062-300p/q-936q/p
F4|coprincipal|5|F4(a2)|-|632-108p/5-4680/p
F4|coprincipal|4|B3|-|562-21p-3744/p
F4|coprincipal|3|F4(a3)|-|-12(p-18)(p-13)/p
F4|coprincipal|2|A2+~A1|-|-9(p-16)(p-13)/p
F4|coprincipal|1|A1|-|-3(p-24)(p-13)/p
E6|principal|>=12|E6|yes|-6(12p-13q)(13p-12q)/(pq)
E6|principal|9,10,11|E6(a1)|no|-8(9p-13q)(7p-9q)/(pq)
E6|principal|8|D5|yes|-45p+1162-7488/p
E6|principal|6,7|E6(a3)|no|-36(6p-13q)(p-2q)/(pq)
E6|principal|5|A4+A1|yes|-2(7p-90)(9p-130)/(5p)
E6|principal|4|D4(a1)|no|-18p+524-3744/p
E6|principal|3|2A2+A1|yes|-18(p-13)(p-12)/p
E6|principal|2|3A1|yes|-9p+263-1872/p
E6|principal|1|0|yes|78(p-12)/p
E7|principal|>=18|E7|yes|-7(18p-19q)(19p-18q)/(pq)
E7|principal|14,15,16,17|E7(a1)|no|-9(14p-19q)(11p-14q)/(pq)
E7|principal|12,13|E7(a2)|no|-(106p-171q)(9p-14q)/(pq)
E7|principal|10,11|E7(a3)|no|-666p/q+2521-2394q/p
E7|principal|9|E6(a1)|no|56p+2199-21546/p
E7|principal|8|E7(a4)|no|-189p/4+1901-19152/p
E7|principal|7|A6|yes|-(p-18)(48p-931)/p
E7|principal|6|E7(a5)|no|-3(p-19)(13p-252)/p
E7|principal|5|A4+A2|yes|9/5(-16p+655-6650/p)
E7|principal|4|A3+A2+A1|yes|-3(3p-56)(5p-114)/(2p)
E7|principal|3|2A2+A1|yes|-18p+721-7182/p
E7|principal|2|4A1|yes|-12(p-21)(p-19)/p
E7|principal|1|0|yes|133(p-18)/p
E8|principal|>=30|E8|yes|-8(30p-31q)(31p-30q)/(pq)
E8|principal|24,25,26,27,28,29|E8(a1)|no|-10(24p-31q)(19p-24q)/(pq)
E8|principal|20,21,22,23|E8(a2)|no|-12(20p-31q)(13p-20q)/(pq)
E8|principal|18,19|E8(a3)|no|-2400p/q+8438-7440q/p
E8|principal|15,16,17|E8(a4)|no|-16(15p-31q)(7p-15q)/(pq)
E8|principal|14|E8(b4)|no|-696p/7+6426-104160/p
E8|principal|12,13|E8(a5)|no|-4(23p-60q)(12p-31q)/(pq)
E8|principal|10,11|E8(a6)|no|-24(10p-31q)(3p-10q)/(pq)
E8|principal|9|E8(b6)|no|-4(4p-135)(11p-372)/(3p)
E8|principal|8|A7|yes|-3(p-31)(21p-640)/p
E8|principal|7|A6+A1|yes|-342p/7+3192-52080/p
E8|principal|6|E8(a7)|no|-40(p-36)(p-31)/p
E8|principal|5|A4+A3|yes|-12(p-31)(3p-100)/p
E8|principal|4|2A3|yes|-30(p-32)(p-31)/p
E8|principal|3|2A2+2A1|yes|-20(p-36)(p-31)/p
E8|principal|2|4A1|yes|-12(p-40)(p-31)/p
E8|principal|1|0|yes|248(p-30)/p
)";

// Parametric classical families. Shape tokens: Q+1, Q-1, Q*<even|odd|any> (block of q's),
// 2Q*<...>, 2Q-1, S, 1. s runs over [lo, hi] with the given parity; zero parts are dropped.
// q parity "(even)" is bracketed as in the exceptional tables.
inline constexpr std::string_view kGoldenClassical = R"(
# family|level family|q|shape|s lo|s hi|s parity|exceptional
A|principal|any|Q*any S|0|q-1|any|yes
C|principal|odd|Q*even S|0|q-1|even|yes
C|principal|odd|Q*even Q-1 S|1|q-1|even|s=q-1
C|principal|(even)|Q*any S|0|q-1|even|yes
B|principal|odd|Q*even S|0|q|odd|yes
B|principal|odd|Q*odd S 1|0|q-1|odd|s=1
B|principal|(even)|Q+1 Q*even|0|0|any|yes
B|principal|(even)|Q+1 Q*even S 1|1|q-1|odd|s=1
B|principal|(even)|Q+1 Q*even Q-1 S|1|q-1|odd|s=q-1
D|principal|odd|Q*odd S|0|q|odd|s=q
D|principal|odd|Q*even S 1|0|q-1|odd|yes
D|principal|even|Q+1 Q*even S|0|q-1|odd|s=1
D|principal|even|Q+1 Q*even Q-1 S 1|0|q-1|odd|s=q-1
C|coprincipal|even|Q*even S|0|q-1|even|-
C|coprincipal|odd|Q+1 Q*even S|0|q-1|even|-
C|coprincipal|odd|Q+1 Q*even Q-1 S|2|q-1|even|-
B|coprincipal|any|2Q*even S|0|2q-1|odd|-
B|coprincipal|any|2Q*even 2Q-1 S 1|0|2q-1|odd|-
)";

// ---------------------------------------------------------------------------

inline std::string table_id(const CartanType& t, LevelFamily f) {
    const std::string pre = f == LevelFamily::Principal ? "Oq:" : "LOq:";
    return pre + (t.classical() ? std::string("classical") : t.name());
}

namespace detail {

inline std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

inline std::string trim(std::string s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    return s.substr(i);
}

// non-comment lines with their line numbers
inline std::vector<std::pair<int, std::string>> data_lines(std::string_view text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int n = 0;
    while (std::getline(in, line)) {
        ++n;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        out.emplace_back(n, line);
    }
    return out;
}

inline Int eval_in_rank(const std::string& expr, int l) {
    std::string s = expr;
    std::replace(s.begin(), s.end(), 'l', 'p');
    const Rational v = parse_formula(s).eval(l, 1);
    ensure(is_integer(v), "non-integer table entry " + expr);
    return v.numerator();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Coxeter data

struct CoxeterRow {
    CartanType type;
    Int h, h_check, Lh_check, r_check;
};

inline CoxeterRow golden_coxeter(const CartanType& t) {
    for (const auto& [n, line] : detail::data_lines(kGoldenCoxeter)) {
        auto f = detail::split(line, '|');
        if (f.size() != 5) throw DataError("coxeter golden line " + std::to_string(n) + " malformed");
        const bool match = f[0].size() == 1 ? (t.classical() && f[0][0] == family_char(t.family)) : f[0] == t.name();
        if (!match) continue;
        return {t, detail::eval_in_rank(f[1], t.rank), detail::eval_in_rank(f[2], t.rank),
                detail::eval_in_rank(f[3], t.rank), detail::eval_in_rank(f[4], t.rank)};
    }
    throw DataError("no Coxeter golden row for " + t.name());
}

// ---------------------------------------------------------------------------
// Exceptional-type rows

struct GoldenRow {
    CartanType type;
    LevelFamily family = LevelFamily::Principal;
    std::vector<int> qs;           // explicit q values
    std::vector<bool> bracketed;   // parallel to qs
    std::optional<int> from;       // ">=N"
    std::string label;
    std::optional<bool> exceptional;
    std::string formula;
    int line = 0;
};

inline std::vector<GoldenRow> golden_rows() {
    std::vector<GoldenRow> out;
    for (const auto& [n, line] : detail::data_lines(kGoldenExceptional)) {
        auto fail = [&, n = n](const std::string& why) {
            throw DataError("golden table line " + std::to_string(n) + ": " + why);
        };
        auto f = detail::split(line, '|');
        if (f.size() != 6) fail("expected 6 fields");
        GoldenRow r;
        r.type = parse_type(f[0]);
        r.family = parse_level_family(f[1]);
        if (f[2].rfind(">=", 0) == 0) {
            r.from = std::stoi(f[2].substr(2));
        } else {
            for (auto tok : detail::split(f[2], ',')) {
                tok = detail::trim(tok);
                const bool br = !tok.empty() && tok.front() == '(';
                if (br) tok = tok.substr(1, tok.size() - 2);
                r.qs.push_back(std::stoi(tok));
                r.bracketed.push_back(br);
            }
        }
        r.label = f[3];
        if (f[4] == "yes") r.exceptional = true;
        else if (f[4] == "no") r.exceptional = false;
        else if (f[4] != "-") fail("exceptional column must be yes, no or -");
        r.formula = f[5];
        r.line = n;
        out.push_back(std::move(r));
    }
    return out;
}

// how many q past an open-ended start get instantiated
inline constexpr int kOpenEndedSpan = 6;

struct CheckedQ {
    int q = 0;
    bool bracketed = false;
    std::string orbit;                  // computed O_q / ^L O_q
    std::optional<bool> exceptional;    // computed flag for the listed orbit
};

struct ChargeSample {
    Int p = 0, q = 0;
    Rational expected, actual;
};

struct RowReport {
    GoldenRow row;
    std::vector<CheckedQ> qs;
    std::string computed_formula;  // canonical text of the computed charge
    std::vector<ChargeSample> samples;
};

struct Diff {
    std::string table;
    std::string where;
    std::string expected;
    std::string actual;
    std::string kind;  // orbit | exceptional | charge | coverage
};

struct TableReport {
    CartanType type;
    std::vector<RowReport> rows;
    std::vector<Diff> diffs;
    bool ok() const { return diffs.empty(); }
};

inline std::string row_q_text(const GoldenRow& r) {
    if (r.from) return ">=" + std::to_string(*r.from);
    std::string s;
    for (std::size_t i = 0; i < r.qs.size(); ++i) {
        if (i) s += ",";
        s += r.bracketed[i] ? "(" + std::to_string(r.qs[i]) + ")" : std::to_string(r.qs[i]);
    }
    return s;
}

namespace detail {

inline bool admissible_q(const RootSystem& rs, LevelFamily f, int q) {
    return f == LevelFamily::Coprincipal || std::gcd(q, rs.r_check()) == 1;
}

// p values giving admissible levels with this q
inline std::vector<Int> sample_ps(const RootSystem& rs, LevelFamily f, int q, int count) {
    const Int den = f == LevelFamily::Principal ? q : rs.r_check() * q;
    const Int lo = f == LevelFamily::Principal ? rs.h_check() : rs.h();
    std::vector<Int> out;
    for (Int p = lo; static_cast<int>(out.size()) < count; ++p)
        if (std::gcd(p, den) == 1) out.push_back(p);
    return out;
}

}  // namespace detail

inline TableReport check_exceptional_tables(const CartanType& t) {
    require(!t.classical(), "golden O_q rows exist for exceptional types; use check_classical_tables for " + t.name());
    auto catp = shared_catalog(t);
    const OrbitCatalog& cat = *catp;
    const RootSystem& rs = cat.root_system();
    TableReport rep{t, {}, {}};

    std::map<LevelFamily, std::set<int>> covered;
    for (const auto& row : golden_rows()) {
        if (row.type != t) continue;
        const std::string tid = table_id(t, row.family);
        RowReport rr{row, {}, {}, {}};
        const std::string where_row = "q=" + row_q_text(row);
        const NilpotentOrbit* listed = nullptr;
        try {
            listed = &cat.find(row.label);
        } catch (const DomainError&) {
            throw DataError("golden table line " + std::to_string(row.line) + ": unknown orbit '" + row.label + "'");
        }

        std::vector<std::pair<int, bool>> qs;
        if (row.from) {
            for (int q = *row.from; q < *row.from + kOpenEndedSpan; ++q) qs.emplace_back(q, false);
        } else {
            for (std::size_t i = 0; i < row.qs.size(); ++i) {
                qs.emplace_back(row.qs[i], row.bracketed[i]);
                covered[row.family].insert(row.qs[i]);
            }
        }
        if (row.from) covered[row.family].insert(-*row.from);  // marks the open end

        for (const auto& [q, br] : qs) {
            CheckedQ cq{q, br, "", std::nullopt};
            const auto& o = row.family == LevelFamily::Principal ? compute_Oq(cat, q) : compute_LOq(cat, q);
            cq.orbit = o.label;
            if (o.label != row.label)
                rep.diffs.push_back({tid, "q=" + std::to_string(q), row.label, o.label, "orbit"});
            if (row.exceptional) {
                cq.exceptional = is_exceptional_pair(cat, q, *listed);
                if (*cq.exceptional != *row.exceptional)
                    rep.diffs.push_back({tid, "q=" + std::to_string(q) + " " + row.label,
                                         *row.exceptional ? "yes" : "no", *cq.exceptional ? "yes" : "no",
                                         "exceptional"});
            }
            if (!row.from && br != (std::gcd(q, rs.r_check()) != 1 && row.family == LevelFamily::Principal))
                rep.diffs.push_back({tid, "q=" + std::to_string(q), br ? "bracketed" : "plain",
                                     br ? "plain" : "bracketed", "coverage"});
            rr.qs.push_back(cq);
        }

        if (!row.formula.empty()) {
            const Laurent expected = parse_formula(row.formula);
            std::vector<int> plain;
            for (const auto& [q, br] : qs)
                if (!br && detail::admissible_q(rs, row.family, q)) plain.push_back(q);
            if (plain.empty()) throw DataError("golden table line " + std::to_string(row.line) + ": charge without an admissible q");
            Laurent computed;
            if (expected.uses_q()) {
                computed = central_charge_laurent(*listed, row.family);
            } else {
                if (plain.size() != 1 || row.from)
                    throw DataError("golden table line " + std::to_string(row.line) + ": q-free charge needs a single q");
                computed = central_charge_laurent(*listed, row.family).substitute_q(plain.front());
            }
            rr.computed_formula = computed.str();
            if (!(computed == expected))
                rep.diffs.push_back({tid, where_row + " " + row.label, expected.str(), computed.str(), "charge"});

            // end to end: k -> O[k] -> c, against the golden formula
            for (std::size_t i = 0; i < plain.size(); ++i) {
                const int q = plain[i];
                const int n = i == 0 ? 5 : 2;
                for (Int p : detail::sample_ps(rs, row.family, q, n)) {
                    const auto lv = make_level(t, row.family, p, q);
                    const auto* o = orbit_of_level(lv, cat).orbit;
                    ChargeSample s{p, q, expected.eval(p, q), central_charge(*o, lv.k)};
                    if (s.expected != s.actual)
                        rep.diffs.push_back({tid, "p=" + std::to_string(p) + " q=" + std::to_string(q) + " " + row.label,
                                             to_string(s.expected), to_string(s.actual), "charge"});
                    rr.samples.push_back(s);
                }
            }
        }
        rep.rows.push_back(std::move(rr));
    }

    // every q below the open end listed exactly once
    for (auto fam : {LevelFamily::Principal, LevelFamily::Coprincipal}) {
        if (fam == LevelFamily::Coprincipal && rs.r_check() == 1) continue;
        auto& s = covered[fam];
        int end = 0;
        for (int v : s)
            if (v < 0) end = -v;
        const int want = fam == LevelFamily::Principal ? rs.h() : rs.Lh_check();
        if (end != want)
            rep.diffs.push_back({table_id(t, fam), "open end", std::to_string(want), std::to_string(end), "coverage"});
        for (int q = 1; q < end; ++q)
            if (!s.count(q)) rep.diffs.push_back({table_id(t, fam), "q=" + std::to_string(q), "row", "missing", "coverage"});
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Classical families

struct ClassicalPattern {
    Family family;
    LevelFamily level_family;
    int q_parity = -1;  // -1 any, 0 even, 1 odd
    bool bracketed = false;
    std::vector<std::string> shape;
    std::string s_lo, s_hi;
    int s_parity = -1;
    std::string exceptional;  // "yes", "s=<expr>", "-"
    int line = 0;
};

inline std::vector<ClassicalPattern> classical_patterns() {
    std::vector<ClassicalPattern> out;
    for (const auto& [n, line] : detail::data_lines(kGoldenClassical)) {
        auto f = detail::split(line, '|');
        if (f.size() != 8) throw DataError("classical golden line " + std::to_string(n) + ": expected 8 fields");
        ClassicalPattern c;
        c.family = parse_family(f[0]);
        c.level_family = parse_level_family(f[1]);
        std::string qp = f[2];
        if (qp.front() == '(') {
            c.bracketed = true;
            qp = qp.substr(1, qp.size() - 2);
        }
        c.q_parity = qp == "any" ? -1 : qp == "even" ? 0 : 1;
        std::istringstream ss(f[3]);
        for (std::string tok; ss >> tok;) c.shape.push_back(tok);
        c.s_lo = f[4];
        c.s_hi = f[5];
        c.s_parity = f[6] == "any" ? -1 : f[6] == "even" ? 0 : 1;
        c.exceptional = f[7];
        c.line = n;
        out.push_back(std::move(c));
    }
    return out;
}

struct ClassicalCandidate {
    Partition partition;
    std::optional<bool> exceptional;
    int line = 0;
};

// Every partition of N that one of the family's rows produces for this q.
inline std::vector<ClassicalCandidate> classical_candidates(Family X, LevelFamily f, int N, int q) {
    std::vector<ClassicalCandidate> out;
    auto ev = [q](const std::string& e) {
        const Rational v = parse_formula(e).eval(1, q);
        return static_cast<int>(v.numerator());
    };
    for (const auto& pat : classical_patterns()) {
        if (pat.family != X || pat.level_family != f) continue;
        if (pat.q_parity >= 0 && q % 2 != pat.q_parity) continue;
        const int lo = ev(pat.s_lo), hi = ev(pat.s_hi);
        const bool has_s = std::find(pat.shape.begin(), pat.shape.end(), "S") != pat.shape.end();
        for (int s = has_s ? lo : 0; s <= (has_s ? hi : 0); ++s) {
            if (has_s && pat.s_parity >= 0 && s % 2 != pat.s_parity) continue;
            // fixed parts, then the block
            int fixed = 0;
            int block_part = 0, block_par = -1;
            for (const auto& tok : pat.shape) {
                if (tok == "Q+1") fixed += q + 1;
                else if (tok == "Q-1") fixed += q - 1;
                else if (tok == "2Q-1") fixed += 2 * q - 1;
                else if (tok == "S") fixed += s;
                else if (tok == "1") fixed += 1;
                else if (tok.rfind("Q*", 0) == 0 || tok.rfind("2Q*", 0) == 0) {
                    block_part = tok[0] == '2' ? 2 * q : q;
                    const std::string par = tok.substr(tok.find('*') + 1);
                    block_par = par == "any" ? -1 : par == "even" ? 0 : 1;
                } else {
                    throw DataError("classical golden line " + std::to_string(pat.line) + ": bad token " + tok);
                }
            }
            const int rest = N - fixed;
            if (rest < 0 || block_part == 0 || rest % block_part != 0) continue;
            const int m = rest / block_part;
            if (block_par >= 0 && m % 2 != block_par) continue;
            std::vector<int> parts;
            for (const auto& tok : pat.shape) {
                if (tok == "Q+1") parts.push_back(q + 1);
                else if (tok == "Q-1") parts.push_back(q - 1);
                else if (tok == "2Q-1") parts.push_back(2 * q - 1);
                else if (tok == "S") parts.push_back(s);
                else if (tok == "1") parts.push_back(1);
                else
                    for (int i = 0; i < m; ++i) parts.push_back(block_part);
            }
            if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) continue;
            std::erase(parts, 0);
            if (parts.empty()) continue;
            Partition d(parts);
            if (!is_valid_for(X, d)) continue;
            ClassicalCandidate c{d, std::nullopt, pat.line};
            if (pat.exceptional == "yes") c.exceptional = true;
            else if (pat.exceptional.rfind("s=", 0) == 0) c.exceptional = s == ev(pat.exceptional.substr(2));
            out.push_back(std::move(c));
        }
    }
    return out;
}

// Upper bound for ^L O_q in B and C, before collapsing.
inline Partition tilde_d(Family X, int N, int q) {
    require(X == Family::B || X == Family::C, "tilde_d is defined for types B and C");
    require(q >= 1, "q must be positive");
    std::vector<int> parts;
    int left = N;
    if (X == Family::C) {
        parts.push_back(std::min(q + 1, left));
        left -= parts.back();
    }
    const int block = X == Family::C ? q : 2 * q;
    while (left >= block) {
        parts.push_back(block);
        left -= block;
    }
    if (left > 0) parts.push_back(left);
    return Partition(parts);
}

inline Partition LOq_by_collapse(Family X, int N, int q) { return collapse(X, tilde_d(X, N, q)); }

inline TableReport check_classical_tables(const CartanType& t) {
    require(t.classical(), "check_classical_tables needs a classical type");
    auto catp = shared_catalog(t);
    const OrbitCatalog& cat = *catp;
    const RootSystem& rs = cat.root_system();
    const int N = natural_dim(t.family, t.rank);
    TableReport rep{t, {}, {}};
    std::vector<LevelFamily> fams{LevelFamily::Principal};
    if (t.family == Family::B || t.family == Family::C) fams.push_back(LevelFamily::Coprincipal);
    for (auto fam : fams) {
        const std::string tid = table_id(t, fam);
        for (int q = 1; q <= rs.h(); ++q) {
            const auto& o = fam == LevelFamily::Principal ? compute_Oq(cat, q) : compute_LOq(cat, q);
            const Partition& got = o.classical->partition;
            const std::string where = t.name() + " q=" + std::to_string(q);
            // past ^L h^v the coprincipal rows stop; ^L O_q is then the whole nullcone
            if (fam == LevelFamily::Coprincipal && q >= rs.Lh_check()) {
                CheckedQ cq{q, false, o.label, std::nullopt};
                if (&o != &cat.principal())
                    rep.diffs.push_back({tid, where, cat.principal().label, o.label, "orbit"});
                rep.rows.push_back({GoldenRow{t, fam, {q}, {false}, std::nullopt, cat.principal().label,
                                              std::nullopt, "", 0},
                                    {cq}, "", {}});
                continue;
            }
            auto cands = classical_candidates(t.family, fam, N, q);
            std::set<Partition> distinct;
            for (const auto& c : cands) distinct.insert(c.partition);
            GoldenRow gr{t, fam, {q}, {false}, std::nullopt, "", std::nullopt, "", 0};
            CheckedQ cq{q, false, o.label, std::nullopt};
            if (distinct.size() != 1) {
                std::string e;
                for (const auto& d : distinct) e += (e.empty() ? "" : " / ") + d.str();
                rep.diffs.push_back({tid, where, distinct.empty() ? "no row applies" : "ambiguous: " + e, got.str(), "orbit"});
            } else {
                const Partition& want = *distinct.begin();
                gr.label = "(" + want.str() + ")";
                if (!(want == got)) rep.diffs.push_back({tid, where, want.str(), got.str(), "orbit"});
                std::set<bool> flags;
                for (const auto& c : cands) {
                    if (c.exceptional) flags.insert(*c.exceptional);
                    gr.line = c.line;
                }
                if (flags.size() > 1)
                    rep.diffs.push_back({tid, where, "one exceptional flag", "conflicting rows", "exceptional"});
                if (flags.size() == 1) {
                    gr.exceptional = *flags.begin();
                    cq.exceptional = is_exceptional_pair(cat, q, o);
                    if (*cq.exceptional != *gr.exceptional)
                        rep.diffs.push_back({tid, where + " " + o.label, *gr.exceptional ? "yes" : "no",
                                             *cq.exceptional ? "yes" : "no", "exceptional"});
                }
            }
            if (fam == LevelFamily::Coprincipal) {
                const Partition viac = LOq_by_collapse(t.family, N, q);
                if (!(viac == got))
                    rep.diffs.push_back({tid, where + " collapse", viac.str(), got.str(), "orbit"});
            }
            rep.rows.push_back({gr, {cq}, "", {}});
        }
    }
    return rep;
}

inline TableReport check_tables(const CartanType& t) {
    return t.classical() ? check_classical_tables(t) : check_exceptional_tables(t);
}

}  // namespace orbitlab
