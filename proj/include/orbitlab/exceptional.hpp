#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "orbitlab/errors.hpp"
#include "orbitlab/orbits.hpp"
#include "orbitlab/partitions.hpp"
#include "orbitlab/rootsys.hpp"

namespace orbitlab {

// dim of the fixed points of sigma_q: Cartan plus roots of height divisible by q.
inline int dim_sigma_fixed(const RootSystem& rs, int q) {
    require(q >= 1, "q must be at least 1");
    int n = rs.rank();
    for (std::size_t i = 0; i < rs.roots().size(); ++i)
        if (rs.height_of(static_cast<int>(i)) % q == 0) ++n;
    return n;
}

struct LeviDecomposition {
    std::vector<int> a_factors;  // m stands for a factor gl_m, Coxeter number m
    std::optional<std::pair<Family, Partition>> residual;

    int max_coxeter() const {
        int c = 0;
        for (int m : a_factors) c = std::max(c, m);
        if (residual) {
            const int N = residual->second.total();
            switch (residual->first) {
                case Family::B: c = std::max(c, N - 1); break;  // B_m: 2m
                case Family::C: c = std::max(c, N); break;      // C_m: 2m
                case Family::D: c = std::max(c, N - 2); break;  // D_m: 2m - 2
                default: break;
            }
        }
        return c;
    }
};

// Pairs of equal parts split off as gl factors; what is left is distinguished in a smaller
// algebra of the same type. In type A every part is its own factor.
inline LeviDecomposition minimal_levi_classical(Family X, const Partition& d) {
    require(X == Family::A || X == Family::B || X == Family::C || X == Family::D, "classical types only");
    require(is_valid_for(X, d), "partition (" + d.str() + ") is not valid for type " + std::string(1, family_char(X)));
    LeviDecomposition L;
    if (X == Family::A) {
        L.a_factors = d.parts();
        return L;
    }
    std::vector<int> rest;
    const auto& p = d.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        const int mult = static_cast<int>(j - i);
        for (int k = 0; k < mult / 2; ++k) L.a_factors.push_back(p[i]);
        if (mult % 2) rest.push_back(p[i]);
        i = j;
    }
    if (!rest.empty()) L.residual = std::make_pair(X, Partition(rest));
    return L;
}

// Largest Coxeter number among the simple factors named in a Bala-Carter label
// such as "A4+A3", "2A2+~A1", "(A3+A1)'", "E8(a7)".
inline int bala_carter_max_coxeter(const std::string& label) {
    if (label == "0") return 0;
    std::string s;
    for (char c : label)
        if (c != '\'') s.push_back(c);
    int best = 0;
    std::size_t i = 0;
    auto fail = [&] { throw DataError("cannot read Bala-Carter label '" + label + "'"); };
    while (i < s.size()) {
        if (s[i] == '(' && (i == 0 || s[i - 1] == '+')) {
            ++i;
            continue;
        }
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;  // multiplicity
        if (i < s.size() && s[i] == '~') ++i;
        if (i >= s.size() || !std::isalpha(static_cast<unsigned char>(s[i]))) fail();
        const char fam = s[i++];
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) fail();
        const int n = std::stoi(s.substr(start, i - start));
        if (i < s.size() && s[i] == '(' && i + 1 < s.size() && std::isalpha(static_cast<unsigned char>(s[i + 1]))) {
            while (i < s.size() && s[i] != ')') ++i;
            ++i;
        }
        while (i < s.size() && (s[i] == ')' || s[i] == '+')) ++i;
        int h = 0;
        switch (fam) {
            case 'A': h = n + 1; break;
            case 'B':
            case 'C': h = 2 * n; break;
            case 'D': h = 2 * n - 2; break;
            case 'E': h = n == 6 ? 12 : n == 7 ? 18 : n == 8 ? 30 : 0; break;
            case 'F': h = 12; break;
            case 'G': h = 6; break;
            default: fail();
        }
        if (h == 0) fail();
        best = std::max(best, h);
    }
    return best;
}

inline int minimal_levi_max_coxeter(const NilpotentOrbit& o) {
    if (o.classical) return minimal_levi_classical(o.classical->family, o.classical->partition).max_coxeter();
    return bala_carter_max_coxeter(o.label);
}

inline bool is_exceptional_pair(const OrbitCatalog& cat, int q, const NilpotentOrbit& f) {
    require(q >= 1, "q must be at least 1");
    require(f.type == cat.type(), "orbit does not belong to the catalog");
    return q >= minimal_levi_max_coxeter(f) && f.dim_centralizer == dim_sigma_fixed(cat.root_system(), q);
}

struct ExceptionalPair {
    int q = 0;
    const NilpotentOrbit* orbit = nullptr;
    bool principal_orbit = false;
};

// Exceptional pairs (q, f) with gcd(q, r^vee) = 1. q runs up to h + r^vee - 1 so that at
// least one admissible q >= h appears; each listed orbit must be O_q.
inline std::vector<ExceptionalPair> exceptional_w_algebras(const OrbitCatalog& cat) {
    const auto& rs = cat.root_system();
    std::vector<ExceptionalPair> out;
    for (int q = 1; q <= rs.h() + rs.r_check() - 1; ++q) {
        if (std::gcd(q, rs.r_check()) != 1) continue;
        for (const auto& f : cat.orbits()) {
            if (!is_exceptional_pair(cat, q, f)) continue;
            const auto& oq = compute_Oq(cat, q);
            const bool same = oq.marks == f.marks ||
                              (oq.classical && f.classical && oq.classical->partition == f.classical->partition);
            ensure(same, "exceptional pair (" + std::to_string(q) + ", " + f.label + ") but O_q is " +
                                            oq.label + " in " + cat.type().name());
            out.push_back({q, &f, &f == &cat.principal()});
        }
    }
    return out;
}

}  // namespace orbitlab
