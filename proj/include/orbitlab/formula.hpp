#pragma once

#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "orbitlab/errors.hpp"
#include "orbitlab/rational.hpp"

namespace orbitlab {

// Laurent polynomial in p, q with rational coefficients: exponent pair -> coefficient.
class Laurent {
public:
    using Key = std::pair<int, int>;

    Laurent() = default;
    Laurent(const Rational& c) { add({0, 0}, c); }  // NOLINT implicit on purpose
    static Laurent monomial(const Rational& c, int ep, int eq) {
        Laurent r;
        r.add({ep, eq}, c);
        return r;
    }

    const std::map<Key, Rational>& terms() const { return t_; }
    bool is_monomial() const { return t_.size() == 1; }
    bool uses_q() const {
        for (const auto& [k, c] : t_)
            if (k.second != 0) return true;
        return false;
    }

    void add(Key k, const Rational& c) {
        if (c == 0) return;
        Rational& s = t_[k];
        s += c;
        if (s == 0) t_.erase(k);
    }

    friend Laurent operator+(Laurent a, const Laurent& b) {
        for (const auto& [k, c] : b.t_) a.add(k, c);
        return a;
    }
    friend Laurent operator-(const Laurent& a) {
        Laurent r;
        for (const auto& [k, c] : a.t_) r.add(k, -c);
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) { return a + (-b); }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_) r.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        return r;
    }
    friend Laurent operator/(const Laurent& a, const Laurent& b) {
        require(b.is_monomial(), "can only divide by a monomial");
        const auto& [k, c] = *b.t_.begin();
        Laurent r;
        for (const auto& [ka, ca] : a.t_) r.add({ka.first - k.first, ka.second - k.second}, ca / c);
        return r;
    }
    friend bool operator==(const Laurent&, const Laurent&) = default;

    Laurent substitute_q(const Rational& qv) const {
        Laurent r;
        for (const auto& [k, c] : t_) {
            require(qv != 0 || k.second >= 0, "q = 0 in a negative power");
            Rational f = 1;
            for (int i = 0; i < std::abs(k.second); ++i) f *= qv;
            r.add({k.first, 0}, k.second >= 0 ? c * f : c / f);
        }
        return r;
    }

    Rational eval(const Rational& p, const Rational& q) const {
        Rational s = 0;
        for (const auto& [k, c] : t_) {
            Rational term = c;
            for (int i = 0; i < std::abs(k.first); ++i) term = k.first > 0 ? term * p : term / p;
            for (int i = 0; i < std::abs(k.second); ++i) term = k.second > 0 ? term * q : term / q;
            s += term;
        }
        return s;
    }

    // canonical text, e.g. "-9p + 263 - 1872/p"
    std::string str() const {
        if (t_.empty()) return "0";
        std::string out;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [k, c] = *it;
            std::string num, den;
            auto put = [](std::string& s, const char* v, int e) {
                if (e == 0) return;
                s += v;
                if (e > 1) s += "^" + std::to_string(e);
            };
            put(num, "p", std::max(k.first, 0));
            put(num, "q", std::max(k.second, 0));
            put(den, "p", std::max(-k.first, 0));
            put(den, "q", std::max(-k.second, 0));
            Rational mag = c < 0 ? -c : c;
            std::string cs;
            if (num.empty() || mag != 1) cs = to_string(mag);
            if (!cs.empty() && !num.empty() && mag.denominator() != 1) cs = "(" + cs + ")";
            std::string mono = cs + num;
            if (!den.empty()) mono += "/" + (den.size() > 1 ? "(" + den + ")" : den);
            if (out.empty()) out = (c < 0 ? "-" : "") + mono;
            else out += (c < 0 ? " - " : " + ") + mono;
        }
        return out;
    }

private:
    std::map<Key, Rational> t_;
};

namespace detail {

class FormulaParser {
public:
    explicit FormulaParser(std::string_view s) : s_(s) {}

    Laurent parse() {
        Laurent r = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return r;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& why) {
        throw DomainError("formula '" + std::string(s_) + "' at " + std::to_string(i_) + ": " + why);
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool starts_primary() {
        skip();
        if (i_ >= s_.size()) return false;
        const char c = s_[i_];
        return c == '(' || c == 'p' || c == 'q' || std::isdigit(static_cast<unsigned char>(c));
    }

    Laurent expr() {
        Laurent r = term();
        for (;;) {
            if (peek('+')) {
                ++i_;
                r = r + term();
            } else if (peek('-')) {
                ++i_;
                r = r - term();
            } else {
                return r;
            }
        }
    }

    Laurent term() {
        Laurent r = unary();
        for (;;) {
            if (peek('*')) {
                ++i_;
                r = r * unary();
            } else if (peek('/')) {
                ++i_;
                r = r / unary();
            } else if (starts_primary()) {
                r = r * power();  // juxtaposition
            } else {
                return r;
            }
        }
    }

    Laurent unary() {
        if (peek('-')) {
            ++i_;
            return -unary();
        }
        if (peek('+')) {
            ++i_;
            return unary();
        }
        return power();
    }

    Laurent power() {
        Laurent b = primary();
        if (!peek('^')) return b;
        ++i_;
        skip();
        std::size_t st = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (st == i_) fail("expected exponent");
        const int e = std::stoi(std::string(s_.substr(st, i_ - st)));
        Laurent r(1);
        for (int k = 0; k < e; ++k) r = r * b;
        return r;
    }

    Laurent primary() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end");
        const char c = s_[i_];
        if (c == '(') {
            ++i_;
            Laurent r = expr();
            if (!peek(')')) fail("missing ')'");
            ++i_;
            return r;
        }
        if (c == 'p') {
            ++i_;
            return Laurent::monomial(1, 1, 0);
        }
        if (c == 'q') {
            ++i_;
            return Laurent::monomial(1, 0, 1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t st = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (i_ - st > 17) fail("integer too long");
            return Laurent(Rational(std::stoll(std::string(s_.substr(st, i_ - st)))));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

}  // namespace detail

// "-2(12p-7q)(7p-4q)/(pq)", "63-9p-112/p", "9/5(-16p+655-6650/p)"
inline Laurent parse_formula(std::string_view s) { return detail::FormulaParser(s).parse(); }

}  // namespace orbitlab
