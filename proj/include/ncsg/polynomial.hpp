#ifndef NCSG_POLYNOMIAL_HPP
#define NCSG_POLYNOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ncsg/linear_combination.hpp"

namespace ncsg {

/// Commutative monomial as a sorted multiset of variable indices.
using Monomial = std::vector<std::uint32_t>;

inline Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial out(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
    return out;
}

/// Multivariate polynomial over Q in commuting indeterminates.
class Polynomial {
public:
    using Terms = LinearCombination<Monomial>;

    Polynomial() = default;
    explicit Polynomial(Terms t) : terms_(std::move(t)) {}

    static Polynomial constant(const Rational& c) { return Polynomial(Terms(Monomial{}, c)); }
    static Polynomial variable(std::uint32_t v, const Rational& c = 1) { return Polynomial(Terms(Monomial{v}, c)); }
    static Polynomial monomial(Monomial m, const Rational& c = 1) {
        std::sort(m.begin(), m.end());
        return Polynomial(Terms(std::move(m), c));
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(Monomial m, const Rational& c) {
        std::sort(m.begin(), m.end());
        terms_.add(std::move(m), c);
    }

    Polynomial& operator+=(const Polynomial& o) {
        terms_ += o.terms_;
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        terms_ -= o.terms_;
        return *this;
    }
    Polynomial& operator*=(const Rational& s) {
        terms_ *= s;
        return *this;
    }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        Polynomial out;
        for (const auto& [m, c] : a.terms_)
            for (const auto& [n, e] : b.terms_) out.terms_.add(multiply(m, n), c * e);
        return out;
    }

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

    /// ∂/∂v.
    Polynomial derivative(std::uint32_t v) const {
        Polynomial out;
        for (const auto& [m, c] : terms_) {
            auto [lo, hi] = std::equal_range(m.begin(), m.end(), v);
            if (lo == hi) continue;
            Monomial rest(m.begin(), lo);
            rest.insert(rest.end(), lo + 1, m.end());
            out.terms_.add(std::move(rest), c * static_cast<long>(hi - lo));
        }
        return out;
    }

    Rational evaluate(std::span<const Rational> values) const {
        Rational sum = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (auto v : m) t *= values[v];
            sum += t;
        }
        return sum;
    }

    int degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.size()));
        return d;
    }

private:
    Terms terms_;
};

/// Prints with caller-supplied variable names, e.g. "x[1,1]".
inline std::string to_string(const Polynomial& p, const std::function<std::string(std::uint32_t)>& name) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const Rational a = abs(c);
        if (sgn(c) < 0) out += first ? "-" : " - ";
        else if (!first) out += " + ";
        bool need_sep = false;
        if (a != 1 || m.empty()) {
            out += to_string(a);
            need_sep = true;
        }
        for (std::size_t k = 0; k < m.size();) {
            std::size_t e = k;
            while (e < m.size() && m[e] == m[k]) ++e;
            if (need_sep) out += "*";
            out += name(m[k]);
            if (e - k > 1) out += "^" + std::to_string(e - k);
            need_sep = true;
            k = e;
        }
        first = false;
    }
    return out;
}

}  // namespace ncsg

#endif  // NCSG_POLYNOMIAL_HPP
