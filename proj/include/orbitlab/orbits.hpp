#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "orbitlab/errors.hpp"
#include "orbitlab/orbit_data.hpp"
#include "orbitlab/partitions.hpp"
#include "orbitlab/rootsys.hpp"

namespace orbitlab {

struct ClassicalLabel {
    Family family = Family::A;
    int N = 0;
    Partition partition;
    int very_even = 0;  // 0: not very even (or not type D); 1: label I; 2: label II
};

struct NilpotentOrbit {
    CartanType type;
    std::string label;                       // partition such as "(4,4,1)" or a Bala-Carter label
    std::optional<ClassicalLabel> classical;  // absent for exceptional types
    std::vector<int> marks;                   // alpha_i(2 x0), Bourbaki order
    Vec x0;
    std::map<int, int> graded_dims;           // key 2j -> dim g_j, g_0 includes the Cartan
    int ht = 0;
    int ht_check = 0;
    int dim_orbit = 0;
    int dim_centralizer = 0;

    bool is_zero() const { return dim_orbit == 0; }
    int graded_dim(int twice_j) const {
        auto it = graded_dims.find(twice_j);
        return it == graded_dims.end() ? 0 : it->second;
    }
    bool even() const {
        return std::all_of(marks.begin(), marks.end(), [](int m) { return m != 1; });
    }
};

inline int height(const NilpotentOrbit& o) { return o.ht; }
inline int coheight(const NilpotentOrbit& o) { return o.ht_check; }

inline std::string classical_label_text(const Partition& d, int very_even) {
    std::string s = "(" + d.str() + ")";
    if (very_even == 1) s += "I";
    if (very_even == 2) s += "II";
    return s;
}

struct DynkinGrading {
    std::vector<int> marks;
    Vec x0;
};

// x0 = h/2 for the Jordan type d, placed as a dominant coweight in epsilon-coordinates.
inline DynkinGrading weighted_dynkin_classical(const RootSystem& rs, const Partition& d, int very_even_label = 1) {
    const CartanType t = rs.type();
    require(t.classical(), "partitions label orbits of classical types only");
    const Family X = t.family;
    const int N = natural_dim(X, t.rank);
    require(is_valid(X, N, d), "partition (" + d.str() + ") is not valid for type " + t.name());
    const bool ve = (X == Family::D) && is_very_even(d);
    require(!ve || very_even_label == 1 || very_even_label == 2, "very even partition needs label I or II");

    std::vector<int> hv;
    for (int p : d.parts())
        for (int v = p - 1; v >= 1 - p; v -= 2) hv.push_back(v);
    std::sort(hv.rbegin(), hv.rend());
    if (X == Family::B) hv.erase(std::find(hv.begin(), hv.end(), 0));
    const int amb = rs.ambient_dim();
    Vec x0(amb);
    for (int i = 0; i < amb; ++i) x0[i] = Rational(hv[i], 2) / rs.form_scale();
    if (ve && very_even_label == 2) x0[amb - 1] = -x0[amb - 1];

    DynkinGrading g{{}, x0};
    for (const auto& a : rs.simple_roots()) {
        Rational m = 2 * rs.form(a, x0);
        ensure(is_integer(m) && m >= 0 && m <= 2, "classical weighted Dynkin mark out of range for (" + d.str() + ")");
        g.marks.push_back(static_cast<int>(m.numerator()));
    }
    return g;
}

inline DynkinGrading weighted_dynkin_classical(Family X, const Partition& d, int very_even_label = 1) {
    auto rs = shared_root_system(make_type(X, rank_from_natural_dim(X, d.total())));
    return weighted_dynkin_classical(*rs, d, very_even_label);
}

// All invariants of the orbit with the given weighted Dynkin diagram.
inline NilpotentOrbit make_orbit(const RootSystem& rs, const std::vector<int>& marks, std::string label,
                                 std::optional<ClassicalLabel> classical = std::nullopt) {
    require(static_cast<int>(marks.size()) == rs.rank(),
            "orbit " + label + ": expected " + std::to_string(rs.rank()) + " marks");
    std::vector<Rational> half;
    for (int m : marks) {
        require(m >= 0 && m <= 2, "orbit " + label + ": marks must lie in {0,1,2}");
        half.emplace_back(m, 2);
    }
    NilpotentOrbit o;
    o.type = rs.type();
    o.label = std::move(label);
    o.classical = std::move(classical);
    o.marks = marks;
    o.x0 = rs.coweight_from_simple_values(half);
    o.graded_dims[0] = rs.rank();
    for (const auto& a : rs.roots()) {
        Rational v = 2 * rs.form(a, o.x0);
        ensure(is_integer(v), "non-integral grading");
        o.graded_dims[static_cast<int>(v.numerator())] += 1;
    }
    o.ht = static_cast<int>((2 * rs.form(rs.theta(), o.x0)).numerator());
    o.ht_check = static_cast<int>((2 * rs.form(rs.theta_s(), o.x0)).numerator());
    o.dim_centralizer = o.graded_dim(0) + o.graded_dim(1);
    o.dim_orbit = rs.dim() - o.dim_centralizer;
    ensure(o.dim_orbit % 2 == 0, "odd orbit dimension for " + o.label);
    for (auto [j, n] : o.graded_dims) ensure(o.graded_dim(-j) == n, "asymmetric grading for " + o.label);
    return o;
}

class OrbitCatalog {
public:
    OrbitCatalog(std::shared_ptr<const RootSystem> rs, std::vector<NilpotentOrbit> orbits)
        : rs_(std::move(rs)), orbits_(std::move(orbits)) {
        std::stable_sort(orbits_.begin(), orbits_.end(), [](const auto& a, const auto& b) {
            return a.dim_orbit != b.dim_orbit ? a.dim_orbit < b.dim_orbit : a.label < b.label;
        });
        int principal = 0, zero = 0;
        for (const auto& o : orbits_) {
            if (o.dim_orbit == rs_->dim() - rs_->rank()) ++principal;
            if (o.dim_orbit == 0) ++zero;
        }
        ensure(principal == 1, "catalog for " + rs_->type().name() + " must contain exactly one principal orbit");
        ensure(zero == 1, "catalog for " + rs_->type().name() + " must contain the zero orbit once");
    }

    const RootSystem& root_system() const { return *rs_; }
    std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
    const CartanType& type() const { return rs_->type(); }
    const std::vector<NilpotentOrbit>& orbits() const { return orbits_; }
    std::size_t size() const { return orbits_.size(); }
    const NilpotentOrbit& zero() const { return orbits_.front(); }
    const NilpotentOrbit& principal() const { return orbits_.back(); }

    // Accepts the display label, a bare partition "4,4,1" (very even ones need I/II),
    // or "0" for the zero orbit.
    const NilpotentOrbit& find(std::string_view text) const {
        std::string key;
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) key.push_back(c);
        if (key == "0") return zero();
        for (const auto& o : orbits_)
            if (o.label == key) return o;
        if (type().classical()) {
            int ve = 0;
            std::string body = key;
            if (body.size() > 2 && body.substr(body.size() - 2) == "II") ve = 2, body.resize(body.size() - 2);
            else if (body.size() > 1 && body.back() == 'I') ve = 1, body.pop_back();
            bool digits = !body.empty() && std::all_of(body.begin(), body.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c)) || c == ',' || c == '(' || c == ')';
            });
            if (digits) {
                Partition d = parse_partition(body);
                std::vector<const NilpotentOrbit*> hits;
                for (const auto& o : orbits_)
                    if (o.classical->partition == d && (ve == 0 || o.classical->very_even == ve)) hits.push_back(&o);
                if (hits.size() == 1) return *hits.front();
                if (hits.size() > 1)
                    throw DomainError("partition (" + d.str() + ") is very even; append I or II");
            }
        }
        throw DomainError("no orbit '" + std::string(text) + "' in type " + type().name());
    }

private:
    std::shared_ptr<const RootSystem> rs_;
    std::vector<NilpotentOrbit> orbits_;
};

constexpr int kDefaultMaxClassicalRank = 12;

inline OrbitCatalog classical_catalog(Family X, int rank, int max_rank = kDefaultMaxClassicalRank) {
    const CartanType t = make_type(X, rank);
    require(t.classical(), "classical_catalog: type " + t.name() + " is not classical");
    require(rank <= max_rank, "classical_catalog: rank " + std::to_string(rank) + " exceeds the supported bound " +
                                  std::to_string(max_rank));
    auto rs = shared_root_system(t);
    const int N = natural_dim(X, rank);
    std::vector<NilpotentOrbit> out;
    for (const auto& d : valid_partitions(X, N)) {
        const bool ve = X == Family::D && is_very_even(d);
        for (int label = ve ? 1 : 0; label <= (ve ? 2 : 0); ++label) {
            auto g = weighted_dynkin_classical(*rs, d, label == 0 ? 1 : label);
            auto o = make_orbit(*rs, g.marks, classical_label_text(d, label), ClassicalLabel{X, N, d, label});
            ensure(o.x0 == g.x0, "classical x0 disagrees with the marks for (" + d.str() + ")");
            out.push_back(std::move(o));
        }
    }
    return OrbitCatalog(rs, std::move(out));
}

inline int expected_exceptional_count(const CartanType& t) {
    switch (t.family) {
        case Family::G: return 5;
        case Family::F: return 16;
        case Family::E: return t.rank == 6 ? 21 : t.rank == 7 ? 45 : 70;
        default: throw DomainError("not an exceptional type: " + t.name());
    }
}

inline OrbitCatalog exceptional_catalog(const CartanType& t) {
    require(!t.classical(), "exceptional_catalog: type " + t.name() + " is classical");
    auto rs = shared_root_system(t);
    std::vector<NilpotentOrbit> out;
    for (const auto& rec : exceptional_records()) {
        if (rec.type != t.name()) continue;
        try {
            out.push_back(make_orbit(*rs, rec.marks, rec.label));
        } catch (const std::exception& e) {
            throw DataError("bad orbit record '" + rec.raw + "': " + e.what());
        }
    }
    if (static_cast<int>(out.size()) != expected_exceptional_count(t))
        throw DataError("orbit data for " + t.name() + " has " + std::to_string(out.size()) + " records, expected " +
                        std::to_string(expected_exceptional_count(t)));
    std::map<std::vector<int>, std::string> seen;
    for (const auto& o : out)
        if (!seen.emplace(o.marks, o.label).second)
            throw DataError("duplicate marks for " + o.label + " and " + seen[o.marks] + " in " + t.name());
    return OrbitCatalog(rs, std::move(out));
}

inline OrbitCatalog catalog_for(const CartanType& t) {
    return t.classical() ? classical_catalog(t.family, t.rank) : exceptional_catalog(t);
}

// Catalogs are built once per type and shared.
inline std::shared_ptr<const OrbitCatalog> shared_catalog(const CartanType& t) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const OrbitCatalog>> cache;
    auto key = std::make_pair(static_cast<int>(t.family), t.rank);
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto cat = std::make_shared<const OrbitCatalog>(catalog_for(make_type(t.family, t.rank)));
    std::lock_guard lock(mu);
    return cache.emplace(key, cat).first->second;
}

namespace detail {

inline const NilpotentOrbit& open_orbit(const OrbitCatalog& cat, int q, bool use_coheight) {
    require(q >= 1, "q must be at least 1");
    std::vector<const NilpotentOrbit*> cand;
    for (const auto& o : cat.orbits())
        if ((use_coheight ? o.ht_check : o.ht) < 2 * q) cand.push_back(&o);
    ensure(!cand.empty(), "no candidate orbits");
    int best = 0;
    for (auto* o : cand) best = std::max(best, o->dim_orbit);
    std::vector<const NilpotentOrbit*> top;
    for (auto* o : cand)
        if (o->dim_orbit == best) top.push_back(o);
    const NilpotentOrbit* win = top.front();
    if (top.size() == 2 && top[0]->classical && top[1]->classical &&
        top[0]->classical->partition == top[1]->classical->partition && top[0]->classical->very_even != 0) {
        // both labels of one very even partition; report label I
        win = top[0]->classical->very_even == 1 ? top[0] : top[1];
    } else {
        ensure(top.size() == 1, "maximal orbit among those with " + std::string(use_coheight ? "coheight" : "height") +
                                    " < " + std::to_string(2 * q) + " is not unique in " + cat.type().name());
    }
    if (win->classical)
        for (auto* o : cand)
            ensure(dominates(win->classical->partition, o->classical->partition),
                   "(" + win->classical->partition.str() + ") does not dominate (" + o->classical->partition.str() + ")");
    return *win;
}

}  // namespace detail

inline const NilpotentOrbit& compute_Oq(const OrbitCatalog& cat, int q) { return detail::open_orbit(cat, q, false); }
inline const NilpotentOrbit& compute_LOq(const OrbitCatalog& cat, int q) { return detail::open_orbit(cat, q, true); }

// True when the winner of compute_Oq/compute_LOq is one of a very even I/II pair.
inline bool both_very_even_labels(const NilpotentOrbit& o) { return o.classical && o.classical->very_even != 0; }

}  // namespace orbitlab
