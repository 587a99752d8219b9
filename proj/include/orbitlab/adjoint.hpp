#pragma once

#include <cstdint>
#include <vector>

#include "orbitlab/errors.hpp"
#include "orbitlab/partitions.hpp"

namespace orbitlab {

namespace detail {

using IMat = std::vector<std::vector<std::int64_t>>;

inline IMat zeros(int n) { return IMat(n, std::vector<std::int64_t>(n, 0)); }

inline IMat matmul(const IMat& a, const IMat& b) {
    const int n = static_cast<int>(a.size());
    IMat c = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (a[i][k])
                for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline IMat transpose(const IMat& a) {
    const int n = static_cast<int>(a.size());
    IMat t = zeros(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[j][i] = a[i][j];
    return t;
}

inline bool is_zero(const IMat& a) {
    for (const auto& r : a)
        for (auto x : r)
            if (x) return false;
    return true;
}

inline IMat commutator(const IMat& a, const IMat& b) {
    IMat ab = matmul(a, b), ba = matmul(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i)
        for (std::size_t j = 0; j < ab.size(); ++j) ab[i][j] -= ba[i][j];
    return ab;
}

}  // namespace detail

// Least m with (ad f)^m = 0 on g, for f nilpotent of Jordan type d in the defining
// realization of sl_N, so_N or sp_N (N <= max_N).
inline int ad_nilpotency_index(Family X, const Partition& d, int max_N = 10) {
    using namespace detail;
    require(X == Family::A || X == Family::B || X == Family::C || X == Family::D,
            "ad_nilpotency_index: classical types only");
    const int N = d.total();
    require(N >= 2, "ad_nilpotency_index: need N >= 2");
    require(N <= max_N, "ad_nilpotency_index: N = " + std::to_string(N) + " exceeds bound " + std::to_string(max_N));
    require(is_valid_for(X, d), "partition (" + d.str() + ") is not valid for type " + std::string(1, family_char(X)));

    IMat f = zeros(N), B = zeros(N);
    const int eps = (X == Family::C) ? -1 : 1;  // B^T = eps B
    int pos = 0;
    const auto& parts = d.parts();
    for (std::size_t i = 0; i < parts.size();) {
        const int p = parts[i];
        // blocks whose own form would have the wrong symmetry come in dual pairs
        const bool paired = X != Family::A && ((p % 2 == 0) == (eps == 1));
        if (paired) {
            require(i + 1 < parts.size() && parts[i + 1] == p, "unpaired part " + std::to_string(p));
            for (int k = 0; k + 1 < p; ++k) {
                f[pos + k + 1][pos + k] = 1;
                f[pos + p + k][pos + p + k + 1] = -1;  // -J^T on the dual block
            }
            for (int k = 0; k < p; ++k) {
                B[pos + k][pos + p + k] = 1;
                B[pos + p + k][pos + k] = eps;
            }
            pos += 2 * p;
            i += 2;
        } else {
            for (int k = 0; k + 1 < p; ++k) f[pos + k + 1][pos + k] = 1;
            for (int k = 1; k <= p; ++k) B[pos + k - 1][pos + p - k] = (k % 2 == 0) ? 1 : -1;
            pos += p;
            i += 1;
        }
    }

    std::vector<IMat> basis;
    if (X == Family::A) {
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                if (i == j) continue;
                IMat e = zeros(N);
                e[i][j] = 1;
                basis.push_back(e);
            }
        for (int i = 0; i + 1 < N; ++i) {
            IMat e = zeros(N);
            e[i][i] = 1;
            e[i + 1][i + 1] = -1;
            basis.push_back(e);
        }
    } else {
        // X = B^{-1} E with E^T = -eps E; B is a signed permutation so B^{-1} = B^T
        const IMat Binv = transpose(B);
        for (int i = 0; i < N; ++i)
            for (int j = i; j < N; ++j) {
                if (i == j && eps == 1) continue;
                IMat e = zeros(N);
                e[i][j] = 1;
                e[j][i] = (i == j) ? 1 : -eps;
                basis.push_back(matmul(Binv, e));
            }
        IMat lhs = matmul(transpose(f), B), rhs = matmul(B, f);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) lhs[i][j] += rhs[i][j];
        require(is_zero(lhs), "nilpotent representative for (" + d.str() + ") does not preserve the form");
    }

    int index = 1;
    for (const auto& x : basis) {
        IMat y = x;
        int m = 0;
        while (!is_zero(y)) {
            y = commutator(f, y);
            ++m;
            ensure(m <= 2 * N, "ad f failed to be nilpotent");
        }
        index = std::max(index, m);
    }
    return index;
}

}  // namespace orbitlab
