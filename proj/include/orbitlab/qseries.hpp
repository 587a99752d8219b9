#pragma once

#include <map>
#include <string>
#include <vector>

#include "orbitlab/errors.hpp"
#include "orbitlab/rational.hpp"

namespace orbitlab {

// Truncated series q^offset * sum_{n >= 0} c_n q^{n/2}; only n <= trunc2 is kept.
class QSeries {
public:
    QSeries() = default;
    QSeries(Rational offset, int trunc2) : offset_(offset), trunc2_(trunc2) {
        require(trunc2 >= 0, "truncation order must be non-negative");
    }

    static QSeries one(int trunc2) {
        QSeries s(0, trunc2);
        s.add_term(0, 1);
        return s;
    }

    const Rational& offset() const { return offset_; }
    int trunc2() const { return trunc2_; }
    Rational trunc_order() const { return Rational(trunc2_, 2); }
    const std::map<int, Rational>& terms() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    // coefficient of q^{offset + n/2}
    Rational coeff2(int n) const {
        auto it = coeffs_.find(n);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }
    Rational coeff(const Rational& exponent_above_offset) const {
        Rational d = exponent_above_offset * 2;
        require(is_integer(d), "exponent off the half-integer grid");
        return coeff2(static_cast<int>(d.numerator()));
    }

    void add_term(int n2, const Rational& c) {
        require(n2 >= 0, "negative exponent relative to offset");
        if (n2 > trunc2_ || c == 0) return;
        Rational& slot = coeffs_[n2];
        slot += c;
        if (slot == 0) coeffs_.erase(n2);
    }

    QSeries& operator+=(const QSeries& o) {
        require(offset_ == o.offset_, "adding series with different offsets");
        trunc2_ = std::min(trunc2_, o.trunc2_);
        std::map<int, Rational> keep;
        for (auto& [n, c] : coeffs_)
            if (n <= trunc2_) keep.emplace(n, c);
        coeffs_ = std::move(keep);
        for (const auto& [n, c] : o.coeffs_) add_term(n, c);
        return *this;
    }

    QSeries operator*(const QSeries& o) const {
        QSeries r(offset_ + o.offset_, std::min(trunc2_, o.trunc2_));
        for (const auto& [a, x] : coeffs_)
            for (const auto& [b, y] : o.coeffs_) {
                if (a + b > r.trunc2_) break;
                r.add_term(a + b, x * y);
            }
        return r;
    }

    // 1/s for s with nonzero leading coefficient
    QSeries inverse() const {
        const Rational c0 = coeff2(0);
        require(c0 != 0, "series is not a unit");
        std::vector<Rational> a(trunc2_ + 1, Rational(0)), b(trunc2_ + 1, Rational(0));
        for (const auto& [n, c] : coeffs_) a[n] = c;
        b[0] = 1 / c0;
        for (int n = 1; n <= trunc2_; ++n) {
            Rational acc = 0;
            for (int j = 1; j <= n; ++j)
                if (a[j] != 0) acc += a[j] * b[n - j];
            b[n] = -acc / c0;
        }
        QSeries r(-offset_, trunc2_);
        for (int n = 0; n <= trunc2_; ++n) r.add_term(n, b[n]);
        return r;
    }

    // Multiplies in place by (1 - q^{step2/2})^{-power}.
    void divide_by_one_minus(int step2, int power = 1) {
        require(step2 > 0, "step must be positive");
        for (int k = 0; k < power; ++k) {
            std::vector<Rational> dense(trunc2_ + 1, Rational(0));
            for (const auto& [n, c] : coeffs_) dense[n] = c;
            for (int n = step2; n <= trunc2_; ++n) dense[n] += dense[n - step2];
            coeffs_.clear();
            for (int n = 0; n <= trunc2_; ++n)
                if (dense[n] != 0) coeffs_.emplace(n, dense[n]);
        }
    }

    // Multiplies in place by (1 - q^{step2/2})^{power}.
    void multiply_by_one_minus(int step2, int power = 1) {
        require(step2 > 0, "step must be positive");
        for (int k = 0; k < power; ++k) {
            std::vector<Rational> dense(trunc2_ + 1, Rational(0));
            for (const auto& [n, c] : coeffs_) dense[n] = c;
            for (int n = trunc2_; n >= step2; --n) dense[n] -= dense[n - step2];
            coeffs_.clear();
            for (int n = 0; n <= trunc2_; ++n)
                if (dense[n] != 0) coeffs_.emplace(n, dense[n]);
        }
    }

    friend bool operator==(const QSeries& a, const QSeries& b) {
        return a.offset_ == b.offset_ && a.trunc2_ == b.trunc2_ && a.coeffs_ == b.coeffs_;
    }

    // "q^(-1/24) * (1 + q^2 + 2q^(7/2) + O(q^6))"
    std::string str() const {
        std::string body;
        for (const auto& [n, c] : coeffs_) {
            Rational e(n, 2);
            std::string mag = to_string(c < 0 ? -c : c);
            if (mag.find('/') != std::string::npos) mag = "(" + mag + ")";
            if (body.empty()) body += c < 0 ? "-" : "";
            else body += c < 0 ? " - " : " + ";
            if (e == 0) body += mag;
            else {
                if (mag != "1") body += mag;
                body += "q";
                if (e != 1) body += e.denominator() == 1 ? "^" + to_string(e) : "^(" + to_string(e) + ")";
            }
        }
        const Rational t(trunc2_ + 1, 2);
        std::string tail = "O(q^" + (t.denominator() == 1 ? to_string(t) : "(" + to_string(t) + ")") + ")";
        body = body.empty() ? tail : body + " + " + tail;
        if (offset_ == 0) return body;
        return "q^(" + to_string(offset_) + ") * (" + body + ")";
    }

private:
    Rational offset_ = 0;
    int trunc2_ = 0;
    std::map<int, Rational> coeffs_;
};

}  // namespace orbitlab
