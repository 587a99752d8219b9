#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "orbitlab/errors.hpp"
#include "orbitlab/rational.hpp"

namespace orbitlab {

enum class Family { A, B, C, D, E, F, G };

inline char family_char(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

struct CartanType {
    Family family = Family::A;
    int rank = 1;

    std::string name() const { return std::string(1, family_char(family)) + std::to_string(rank); }
    bool classical() const { return family <= Family::D; }
    bool simply_laced() const {
        return family == Family::A || family == Family::D || family == Family::E;
    }
    friend bool operator==(const CartanType&, const CartanType&) = default;
};

inline Family parse_family(std::string_view s) {
    if (s.size() == 1) {
        char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
        if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
    }
    throw DomainError("unknown Lie type '" + std::string(s) + "' (expected one of A..G)");
}

// Validates the (family, rank) pair against the simple-type classification.
inline CartanType make_type(Family family, int rank) {
    auto bad = [&](const std::string& constraint) {
        throw DomainError("invalid type " + std::string(1, family_char(family)) + std::to_string(rank) +
                          ": " + constraint);
    };
    switch (family) {
        case Family::A: if (rank < 1) bad("A requires rank >= 1"); break;
        case Family::B: if (rank < 2) bad("B requires rank >= 2"); break;
        case Family::C: if (rank < 2) bad("C requires rank >= 2"); break;
        case Family::D: if (rank < 3) bad("D requires rank >= 3"); break;
        case Family::E: if (rank < 6 || rank > 8) bad("E requires rank in {6,7,8}"); break;
        case Family::F: if (rank != 4) bad("F requires rank 4"); break;
        case Family::G: if (rank != 2) bad("G requires rank 2"); break;
    }
    return CartanType{family, rank};
}

inline CartanType parse_type(std::string_view family, int rank) { return make_type(parse_family(family), rank); }

// Accepts "E8", "G2", "A3", or "E 8".
inline CartanType parse_type(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.size() < 2) throw DomainError("malformed type '" + std::string(text) + "'");
    int rank = 0;
    try {
        std::size_t used = 0;
        rank = std::stoi(s.substr(1), &used);
        if (used != s.size() - 1) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw DomainError("malformed type '" + std::string(text) + "'");
    }
    return parse_type(s.substr(0, 1), rank);
}

// A finite root system in Bourbaki epsilon-coordinates, with the invariant form
// normalized so that (theta|theta) = 2. All data exact.
class RootSystem {
public:
    explicit RootSystem(CartanType t) : type_(t) {
        build_simple_roots();
        generate_roots();
        compute_constants();
    }

    const CartanType& type() const { return type_; }
    int rank() const { return type_.rank; }
    int ambient_dim() const { return ambient_; }
    int dim() const { return rank() + static_cast<int>(roots_.size()); }

    const std::vector<Vec>& simple_roots() const { return simple_; }
    const std::vector<Vec>& roots() const { return roots_; }
    const std::vector<int>& positive_indices() const { return positive_; }
    std::vector<Vec> positive_roots() const {
        std::vector<Vec> out;
        for (int i : positive_) out.push_back(roots_[i]);
        return out;
    }
    // Simple-root coefficients of roots()[i].
    const std::vector<int>& coefficients(int i) const { return coeffs_[i]; }
    bool is_positive(int i) const { return height_[i] > 0; }
    bool is_long(int i) const { return form(roots_[i], roots_[i]) == 2; }
    int height_of(int i) const { return height_[i]; }

    const Vec& theta() const { return roots_[theta_]; }
    const Vec& theta_s() const { return roots_[theta_s_]; }
    const Vec& rho() const { return rho_; }
    const Vec& rho_check() const { return rho_check_; }

    int h() const { return h_; }
    int h_check() const { return h_check_; }
    int Lh_check() const { return Lh_check_; }
    int r_check() const { return r_check_; }

    Rational form_scale() const { return scale_; }
    std::vector<Vec> form_matrix() const {
        std::vector<Vec> m(ambient_, Vec(ambient_, Rational(0)));
        for (int i = 0; i < ambient_; ++i) m[i][i] = scale_;
        return m;
    }
    Rational form(const Vec& a, const Vec& b) const { return scale_ * euclid_dot(a, b); }

    Vec coroot(const Vec& alpha) const { return Rational(2) / form(alpha, alpha) * alpha; }

    // <alpha_j, alpha_i^vee>
    int cartan(int i, int j) const { return cartan_[i][j]; }

    // Natural pairing of a weight with a coweight, both given in ambient coordinates
    // (coweights are identified with weights through the normalized form).
    Rational eval(const Vec& weight, const Vec& coweight) const {
        require(static_cast<int>(weight.size()) == ambient_ && static_cast<int>(coweight.size()) == ambient_,
                "dimension mismatch in pairing (ambient dim " + std::to_string(ambient_) + ")");
        return form(weight, coweight);
    }

    int root_index(const Vec& alpha) const {
        auto it = index_.find(alpha);
        return it == index_.end() ? -1 : it->second;
    }

    int root_height(const Vec& alpha) const {
        require(static_cast<int>(alpha.size()) == ambient_, "dimension mismatch for root");
        int idx = root_index(alpha);
        require(idx >= 0, "vector is not a root of " + type_.name());
        return height_[idx];
    }

    // Simple-root coordinates of any element of the root span.
    Vec simple_coordinates(const Vec& v) const {
        Vec rhs(rank());
        for (int j = 0; j < rank(); ++j) rhs[j] = form(v, simple_[j]);
        Vec c(rank(), Rational(0));
        for (int i = 0; i < rank(); ++i)
            for (int j = 0; j < rank(); ++j) c[i] += gram_inv_[i][j] * rhs[j];
        return c;
    }

    // The coweight x (ambient coordinates) with alpha_i(x) = values[i].
    Vec coweight_from_simple_values(const std::vector<Rational>& values) const {
        Vec x(ambient_, Rational(0));
        for (int i = 0; i < rank(); ++i) {
            Rational c = 0;
            for (int j = 0; j < rank(); ++j) c += gram_inv_[i][j] * values[j];
            x = x + c * simple_[i];
        }
        return x;
    }

private:
    static Vec unit(int n, int i, Rational s = 1) {
        Vec v(n, Rational(0));
        v[i] = s;
        return v;
    }

    void build_simple_roots() {
        const int l = type_.rank;
        auto e = [&](int i) { return unit(ambient_, i); };
        switch (type_.family) {
            case Family::A:
                ambient_ = l + 1;
                for (int i = 0; i < l; ++i) simple_.push_back(e(i) - e(i + 1));
                break;
            case Family::B:
                ambient_ = l;
                for (int i = 0; i + 1 < l; ++i) simple_.push_back(e(i) - e(i + 1));
                simple_.push_back(e(l - 1));
                break;
            case Family::C:
                ambient_ = l;
                for (int i = 0; i + 1 < l; ++i) simple_.push_back(e(i) - e(i + 1));
                simple_.push_back(Rational(2) * e(l - 1));
                break;
            case Family::D:
                ambient_ = l;
                for (int i = 0; i + 1 < l; ++i) simple_.push_back(e(i) - e(i + 1));
                simple_.push_back(e(l - 2) + e(l - 1));
                break;
            case Family::G:
                ambient_ = 3;
                simple_.push_back(e(0) - e(1));
                simple_.push_back(e(1) + e(2) - Rational(2) * e(0));
                break;
            case Family::F: {
                ambient_ = 4;
                simple_.push_back(e(1) - e(2));
                simple_.push_back(e(2) - e(3));
                simple_.push_back(e(3));
                simple_.push_back(Rational(1, 2) * (e(0) - e(1) - e(2) - e(3)));
                break;
            }
            case Family::E: {
                ambient_ = 8;
                Vec a1(8, Rational(-1, 2));
                a1[0] = Rational(1, 2);
                a1[7] = Rational(1, 2);
                simple_.push_back(a1);
                simple_.push_back(e(0) + e(1));
                for (int i = 1; i + 1 < l; ++i) simple_.push_back(e(i) - e(i - 1));
                break;
            }
        }
    }

    void generate_roots() {
        const int l = rank();
        // Euclidean lengths are rescaled after theta is known; closure only needs ratios.
        std::vector<Vec> frontier = simple_;
        std::map<Vec, int> seen;
        for (const auto& a : simple_) seen.emplace(a, 0);
        while (!frontier.empty()) {
            std::vector<Vec> next;
            for (const auto& r : frontier)
                for (const auto& a : simple_) {
                    Rational c = Rational(2) * euclid_dot(r, a) / euclid_dot(a, a);
                    Vec img = r - c * a;
                    if (seen.emplace(img, 0).second) next.push_back(img);
                }
            frontier = std::move(next);
        }
        for (auto& [v, _] : seen) roots_.push_back(v);

        std::vector<Vec> gram(l, Vec(l));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) gram[i][j] = euclid_dot(simple_[i], simple_[j]);
        gram_inv_ = invert(gram);

        for (std::size_t i = 0; i < roots_.size(); ++i) {
            Vec rhs(l);
            for (int j = 0; j < l; ++j) rhs[j] = euclid_dot(roots_[i], simple_[j]);
            std::vector<int> c(l);
            int ht = 0;
            for (int a = 0; a < l; ++a) {
                Rational s = 0;
                for (int b = 0; b < l; ++b) s += gram_inv_[a][b] * rhs[b];
                ensure(is_integer(s), "non-integral root coordinate");
                c[a] = static_cast<int>(s.numerator());
                ht += c[a];
            }
            coeffs_.push_back(c);
            height_.push_back(ht);
            index_.emplace(roots_[i], static_cast<int>(i));
            if (ht > 0) positive_.push_back(static_cast<int>(i));
        }
        std::sort(positive_.begin(), positive_.end(),
                  [&](int a, int b) { return height_[a] != height_[b] ? height_[a] < height_[b] : a < b; });
    }

    void compute_constants() {
        const int l = rank();
        theta_ = positive_.back();
        Rational theta_len = euclid_dot(roots_[theta_], roots_[theta_]);
        scale_ = Rational(2) / theta_len;
        // gram_inv_ was built from the Euclidean product; rescale to the normalized form.
        for (auto& row : gram_inv_)
            for (auto& x : row) x /= scale_;

        Rational short_len = theta_len;
        for (int i : positive_) short_len = std::min(short_len, euclid_dot(roots_[i], roots_[i]));
        theta_s_ = -1;
        for (int i : positive_)
            if (euclid_dot(roots_[i], roots_[i]) == short_len &&
                (theta_s_ < 0 || height_[i] > height_[theta_s_]))
                theta_s_ = i;

        rho_.assign(ambient_, Rational(0));
        rho_check_.assign(ambient_, Rational(0));
        for (int i : positive_) {
            rho_ = rho_ + Rational(1, 2) * roots_[i];
            rho_check_ = rho_check_ + Rational(1, 2) * coroot(roots_[i]);
        }
        cartan_.assign(l, std::vector<int>(l));
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                Rational v = form(simple_[j], coroot(simple_[i]));
                cartan_[i][j] = static_cast<int>(v.numerator());
            }
        h_ = height_[theta_] + 1;
        h_check_ = static_cast<int>((form(rho_, theta()) + 1).numerator());
        Lh_check_ = static_cast<int>((form(theta_s(), rho_check_) + 1).numerator());
        r_check_ = static_cast<int>((Rational(2) / form(theta_s(), theta_s())).numerator());
    }

    static std::vector<Vec> invert(std::vector<Vec> m) {
        const int n = static_cast<int>(m.size());
        std::vector<Vec> inv(n, Vec(n, Rational(0)));
        for (int i = 0; i < n; ++i) inv[i][i] = 1;
        for (int col = 0; col < n; ++col) {
            int piv = col;
            while (piv < n && m[piv][col] == 0) ++piv;
            ensure(piv < n, "singular Gram matrix");
            std::swap(m[piv], m[col]);
            std::swap(inv[piv], inv[col]);
            Rational d = m[col][col];
            for (int j = 0; j < n; ++j) {
                m[col][j] /= d;
                inv[col][j] /= d;
            }
            for (int r = 0; r < n; ++r) {
                if (r == col || m[r][col] == 0) continue;
                Rational f = m[r][col];
                for (int j = 0; j < n; ++j) {
                    m[r][j] -= f * m[col][j];
                    inv[r][j] -= f * inv[col][j];
                }
            }
        }
        return inv;
    }

    CartanType type_;
    int ambient_ = 0;
    std::vector<Vec> simple_;
    std::vector<Vec> roots_;
    std::vector<std::vector<int>> coeffs_;
    std::vector<int> height_;
    std::vector<int> positive_;
    std::map<Vec, int> index_;
    std::vector<Vec> gram_inv_;
    std::vector<std::vector<int>> cartan_;
    int theta_ = 0, theta_s_ = 0;
    Rational scale_ = 1;
    Vec rho_, rho_check_;
    int h_ = 0, h_check_ = 0, Lh_check_ = 0, r_check_ = 1;
};

inline RootSystem build_root_system(CartanType t) { return RootSystem(make_type(t.family, t.rank)); }

inline RootSystem build_root_system(std::string_view family, int rank) {
    return RootSystem(parse_type(family, rank));
}

// Shared, immutable instance per type.
inline std::shared_ptr<const RootSystem> shared_root_system(CartanType t) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const RootSystem>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_pair(static_cast<int>(t.family), t.rank);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto rs = std::make_shared<const RootSystem>(make_type(t.family, t.rank));
    cache.emplace(key, rs);
    return rs;
}

inline int root_height(const RootSystem& rs, const Vec& alpha) { return rs.root_height(alpha); }

inline Rational eval(const RootSystem& rs, const Vec& weight, const Vec& coweight) {
    return rs.eval(weight, coweight);
}

}  // namespace orbitlab
