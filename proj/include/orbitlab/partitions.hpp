#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "orbitlab/errors.hpp"
#include "orbitlab/rootsys.hpp"

namespace orbitlab {

// Weakly decreasing list of positive integers, stored without trailing zeros.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::erase(parts_, 0);
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            require(parts_[i] > 0, "partition parts must be positive");
            require(i == 0 || parts_[i] <= parts_[i - 1], "partition parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // i-th part with implicit zero padding
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int multiplicity(int v) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), v)); }

    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// Parses "4,4,1" (parentheses and spaces tolerated); parts are sorted into decreasing order.
inline Partition parse_partition(std::string_view text) {
    std::vector<int> parts;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        for (char c : cur)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw DomainError("malformed partition '" + std::string(text) + "'");
        if (cur.size() > 6) throw DomainError("partition part too large in '" + std::string(text) + "'");
        parts.push_back(std::stoi(cur));
        if (parts.back() == 0) throw DomainError("partition parts must be positive: '" + std::string(text) + "'");
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ') flush();
        else if (c == '(' || c == ')' || c == '[' || c == ']') continue;
        else cur.push_back(c);
    }
    flush();
    if (parts.empty()) throw DomainError("empty partition '" + std::string(text) + "'");
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

// Size N of the natural representation for a classical type of the given rank.
inline int natural_dim(Family X, int rank) {
    switch (X) {
        case Family::A: return rank + 1;
        case Family::B: return 2 * rank + 1;
        case Family::C:
        case Family::D: return 2 * rank;
        default: throw DomainError("natural_dim: not a classical type");
    }
}

inline int rank_from_natural_dim(Family X, int N) {
    switch (X) {
        case Family::A: return N - 1;
        case Family::B: require(N % 2 == 1, "type B needs odd N"); return (N - 1) / 2;
        case Family::C: require(N % 2 == 0, "type C needs even N"); return N / 2;
        case Family::D: require(N % 2 == 0, "type D needs even N"); return N / 2;
        default: throw DomainError("rank_from_natural_dim: not a classical type");
    }
}

// Membership in the orbit-labelling set for type X: for B and D even parts must occur
// with even multiplicity, for C odd parts must.
inline bool is_valid_for(Family X, const Partition& d) {
    if (X == Family::A) return true;
    require(X == Family::B || X == Family::C || X == Family::D, "partitions label classical types only");
    const int bad_parity = (X == Family::C) ? 1 : 0;
    const auto& p = d.parts();
    for (std::size_t i = 0; i < p.size();) {
        std::size_t j = i;
        while (j < p.size() && p[j] == p[i]) ++j;
        if (p[i] % 2 == bad_parity && (j - i) % 2 == 1) return false;
        i = j;
    }
    if (X == Family::B && d.total() % 2 == 0) return false;
    if ((X == Family::C || X == Family::D) && d.total() % 2 == 1) return false;
    return true;
}

inline bool is_valid(Family X, int N, const Partition& d) {
    require(d.total() == N, "partition " + d.str() + " does not sum to " + std::to_string(N));
    return is_valid_for(X, d);
}

// Only meaningful for type D: all parts even, each with even multiplicity.
inline bool is_very_even(const Partition& d) {
    if (d.empty()) return false;
    for (int v : d.parts())
        if (v % 2 != 0 || d.multiplicity(v) % 2 != 0) return false;
    return true;
}

inline bool dominates(const Partition& d, const Partition& e) {
    require(d.total() == e.total(), "dominance needs equal totals (" + d.str() + " vs " + e.str() + ")");
    int sd = 0, se = 0;
    const std::size_t n = std::max(d.parts().size(), e.parts().size());
    for (std::size_t k = 0; k < n; ++k) {
        sd += d[k];
        se += e[k];
        if (sd < se) return false;
    }
    return true;
}

inline Partition transpose(const Partition& d) {
    std::vector<int> t;
    if (d.empty()) return Partition();
    for (int k = 1; k <= d[0]; ++k) {
        int c = 0;
        for (int v : d.parts())
            if (v >= k) ++c;
        t.push_back(c);
    }
    return Partition(t);
}

// The largest partition of type X dominated by d: repeatedly take the largest part v of
// the wrong parity with odd multiplicity, lower its last occurrence by one and raise the
// first later part smaller than v - 1 by one (appending a 1 if there is none).
inline Partition collapse(Family X, const Partition& d) {
    if (X == Family::A) return d;
    require(X == Family::B || X == Family::C || X == Family::D, "collapse is defined for classical types");
    require((X == Family::B) == (d.total() % 2 == 1), "partition total has the wrong parity for type " +
                                                          std::string(1, family_char(X)));
    const int bad_parity = (X == Family::C) ? 1 : 0;
    std::vector<int> p = d.parts();
    while (true) {
        int v = -1;
        for (std::size_t i = 0; i < p.size();) {
            std::size_t j = i;
            while (j < p.size() && p[j] == p[i]) ++j;
            if (p[i] % 2 == bad_parity && (j - i) % 2 == 1) {
                v = p[i];
                break;
            }
            i = j;
        }
        if (v < 0) break;
        std::size_t last = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] == v) last = i;
        p[last] -= 1;
        std::size_t k = last + 1;
        while (k < p.size() && p[k] >= v - 1) ++k;
        if (k < p.size()) p[k] += 1;
        else p.push_back(1);
        std::erase(p, 0);
    }
    return Partition(p);
}

// All partitions of N in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int N) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int v = std::min(remaining, max_part); v >= 1; --v) {
            cur.push_back(v);
            rec(remaining - v, v);
            cur.pop_back();
        }
    };
    rec(N, N);
    return out;
}

inline std::vector<Partition> valid_partitions(Family X, int N) {
    std::vector<Partition> out;
    for (auto& d : partitions_of(N))
        if (is_valid_for(X, d)) out.push_back(std::move(d));
    return out;
}

}  // namespace orbitlab
