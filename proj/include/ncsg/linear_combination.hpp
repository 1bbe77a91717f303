#ifndef NCSG_LINEAR_COMBINATION_HPP
#define NCSG_LINEAR_COMBINATION_HPP

#include <cstddef>
#include <map>
#include <utility>

#include "ncsg/rational.hpp"

namespace ncsg {

/// Finite formal sum of keys with nonzero rational coefficients, kept in a
/// sorted map so that equal elements have equal representations.
template <typename Key, typename Compare = std::less<Key>>
class LinearCombination {
public:
    using map_type = std::map<Key, Rational, Compare>;
    using const_iterator = typename map_type::const_iterator;

    LinearCombination() = default;
    LinearCombination(const Key& key, const Rational& coeff) { add(key, coeff); }

    void add(const Key& key, const Rational& coeff) {
        if (is_zero(coeff)) return;
        auto [it, inserted] = terms_.try_emplace(key, coeff);
        if (!inserted) {
            it->second += coeff;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }
    void add(Key&& key, const Rational& coeff) {
        if (is_zero(coeff)) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), coeff);
        } else {
            it->second += coeff;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    LinearCombination& operator+=(const LinearCombination& o) {
        for (const auto& [k, c] : o.terms_) add(k, c);
        return *this;
    }
    LinearCombination& operator-=(const LinearCombination& o) {
        for (const auto& [k, c] : o.terms_) add(k, -c);
        return *this;
    }
    LinearCombination& operator*=(const Rational& s) {
        if (is_zero(s)) {
            terms_.clear();
        } else {
            for (auto& [k, c] : terms_) c *= s;
        }
        return *this;
    }

    friend LinearCombination operator+(LinearCombination a, const LinearCombination& b) { return a += b; }
    friend LinearCombination operator-(LinearCombination a, const LinearCombination& b) { return a -= b; }
    friend LinearCombination operator*(const Rational& s, LinearCombination a) { return a *= s; }
    friend LinearCombination operator-(LinearCombination a) { return a *= Rational(-1); }

    bool operator==(const LinearCombination& o) const { return terms_ == o.terms_; }

    Rational coeff(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const_iterator begin() const { return terms_.begin(); }
    const_iterator end() const { return terms_.end(); }
    const map_type& terms() const { return terms_; }

    template <typename Pred>
    LinearCombination filtered(Pred keep) const {
        LinearCombination out;
        for (const auto& [k, c] : terms_)
            if (keep(k)) out.terms_.emplace_hint(out.terms_.end(), k, c);
        return out;
    }

private:
    map_type terms_;
};

}  // namespace ncsg

#endif  // NCSG_LINEAR_COMBINATION_HPP
