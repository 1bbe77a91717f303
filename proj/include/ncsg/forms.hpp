#ifndef NCSG_FORMS_HPP
#define NCSG_FORMS_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncsg/necklace.hpp"

namespace ncsg {

/// One letter of a noncommutative form: either an arrow a or its differential da.
struct Letter {
    ArrowId arrow = 0;
    bool d = false;

    auto operator<=>(const Letter&) const = default;
};

/// A cyclic word of letters, i.e. a representative of a class in DR^k where k
/// is the number of d-letters.
using Word = std::vector<Letter>;

/// Normal form of a basis class u_1·da_1·u_2·da_2 ··· u_K·da_K of DR^K:
/// every d-slot is preceded by its 0-form path, the last letter is a d-slot.
template <std::size_t K>
struct FormKey {
    std::array<ArrowId, K> slots{};
    std::array<Path, K> paths{};

    bool operator==(const FormKey&) const = default;

    friend bool operator<(const FormKey& x, const FormKey& y) {
        if (x.slots != y.slots) return x.slots < y.slots;
        for (std::size_t j = 0; j < K; ++j)
            if (!(x.paths[j] == y.paths[j])) return x.paths[j] < y.paths[j];
        return false;
    }

    /// Total path length of the 0-form slots.
    std::size_t degree() const {
        std::size_t n = 0;
        for (const auto& p : paths) n += p.length();
        return n;
    }

    Word word() const {
        Word w;
        for (std::size_t j = 0; j < K; ++j) {
            for (ArrowId a : paths[j].arrows) w.push_back({a, false});
            w.push_back({slots[j], true});
        }
        return w;
    }
};

namespace detail {

inline bool cyclically_composable(const DoubledQuiver& q, const Word& w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (q.tail(w[i].arrow) != q.head(w[(i + 1) % w.size()].arrow)) return false;
    return true;
}

/// Canonical key and sign of a cyclic word with exactly K d-letters; nullopt
/// when the class vanishes (non-composable, or killed by an odd rotation).
template <std::size_t K>
std::optional<std::pair<FormKey<K>, int>> normalize_word(const DoubledQuiver& q, const Word& w) {
    static_assert(K >= 1);
    if (w.empty() || !cyclically_composable(q, w)) return std::nullopt;
    std::vector<std::size_t> dpos;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i].d) dpos.push_back(i);
    if (dpos.size() != K) throw Error(ErrorKind::Validation, "form word has the wrong number of differentials");

    const std::size_t n = w.size();
    std::optional<FormKey<K>> best;
    int best_sign = 1;
    bool vanishes = false;
    for (std::size_t r = 0; r < K; ++r) {
        // rotate so the word ends at d-letter r; the moved tail has degree m
        const std::size_t m = K - 1 - r;
        const int sign = ((m * (K - m)) % 2 == 0) ? 1 : -1;
        const std::size_t start = (dpos[r] + 1) % n;
        FormKey<K> key;
        std::size_t slot = 0;
        std::vector<ArrowId> pending;
        for (std::size_t s = 0; s < n; ++s) {
            const Letter& l = w[(start + s) % n];
            if (l.d) {
                key.slots[slot] = l.arrow;
                key.paths[slot] = pending.empty() ? Path::idempotent(q.head(l.arrow))
                                                  : Path{q.head(pending.front()), pending};
                pending.clear();
                ++slot;
            } else {
                pending.push_back(l.arrow);
            }
        }
        if (!best || key < *best) {
            best = std::move(key);
            best_sign = sign;
        } else if (key == *best && sign != best_sign) {
            vanishes = true;
        }
    }
    if (vanishes) return std::nullopt;
    return std::make_pair(std::move(*best), best_sign);
}

/// Splices the arrows of `p` in place of w[pos].
inline Word splice(const Word& w, std::size_t pos, const Path& p) {
    Word out;
    out.reserve(w.size() + p.length());
    out.insert(out.end(), w.begin(), w.begin() + pos);
    for (ArrowId a : p.arrows) out.push_back({a, false});
    out.insert(out.end(), w.begin() + pos + 1, w.end());
    return out;
}

}  // namespace detail

/// Element of DR^K (K ≥ 1) of the path algebra in normal form.
template <std::size_t K>
class Form {
public:
    using Key = FormKey<K>;
    using Terms = LinearCombination<Key>;
    static constexpr std::size_t degree_k = K;

    explicit Form(QuiverPtr q) : quiver_(std::move(q)) {}

    /// Adds c times the class of a cyclic word with K d-letters.
    void add_word(const Word& w, const Rational& c) {
        if (sgn(c) == 0) return;
        if (auto nk = detail::normalize_word<K>(*quiver_, w)) terms_.add(std::move(nk->first), c * nk->second);
    }
    void add_key(const Key& k, const Rational& c) { add_word(k.word(), c); }

    const QuiverPtr& quiver() const { return quiver_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, static_cast<int>(k.degree()));
        return d;
    }
    Form homogeneous_part(std::size_t deg) const {
        Form f(quiver_);
        f.terms_ = terms_.filtered([deg](const Key& k) { return k.degree() == deg; });
        return f;
    }
    Form truncated(std::size_t max_deg) const {
        Form f(quiver_);
        f.terms_ = terms_.filtered([max_deg](const Key& k) { return k.degree() <= max_deg; });
        return f;
    }

    Form& operator+=(const Form& o) {
        require_same_quiver(quiver_, o.quiver_);
        terms_ += o.terms_;
        return *this;
    }
    Form& operator-=(const Form& o) {
        require_same_quiver(quiver_, o.quiver_);
        terms_ -= o.terms_;
        return *this;
    }
    Form& operator*=(const Rational& s) {
        terms_ *= s;
        return *this;
    }
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    friend Form operator-(Form a) { return a *= Rational(-1); }
    friend Form operator*(const Rational& s, Form a) { return a *= s; }

    bool operator==(const Form& o) const { return same_quiver(quiver_, o.quiver_) && terms_ == o.terms_; }

private:
    QuiverPtr quiver_;
    Terms terms_;
};

using OneForm = Form<1>;
using TwoForm = Form<2>;
using ThreeForm = Form<3>;

template <std::size_t K>
std::string to_string(const Form<K>& f) {
    if (f.is_zero()) return "0";
    const auto& q = *f.quiver();
    std::string out;
    bool first = true;
    for (const auto& [k, c] : f.terms()) {
        out += format_coefficient_prefix(c, first);
        for (std::size_t j = 0; j < K; ++j) {
            if (j) out += ' ';
            if (!k.paths[j].empty()) out += format_path(q, k.paths[j]) + ' ';
            out += "d(" + q.name(k.slots[j]) + ")";
        }
        first = false;
    }
    return out;
}

/// The degree-1 part of a 1-form as coefficient elements: α = Σ_b α_b·db.
inline std::vector<PathAlgebraElement> oneform_coefficients(const OneForm& alpha) {
    std::vector<PathAlgebraElement> out(alpha.quiver()->arrow_count(), PathAlgebraElement(alpha.quiver()));
    for (const auto& [k, c] : alpha.terms()) out[k.slots[0]].add_term(k.paths[0], c);
    return out;
}

// ---------------------------------------------------------------- d

/// d: DR⁰ → DR¹, df = Σ_a (∂f/∂a)·da.
inline OneForm d(const Necklace& f) {
    OneForm out(f.quiver());
    for (const auto& [p, c] : f.terms())
        for (std::size_t k = 0; k < p.length(); ++k) {
            Word w;
            w.reserve(p.length());
            for (std::size_t i = 0; i < p.length(); ++i) w.push_back({p.arrows[i], i == k});
            out.add_word(w, c);
        }
    return out;
}

/// d: DR^K → DR^{K+1}, the super-derivation with d(a) = da, d(da) = 0.
template <std::size_t K>
Form<K + 1> d(const Form<K>& f) {
    Form<K + 1> out(f.quiver());
    for (const auto& [k, c] : f.terms()) {
        Word w = k.word();
        int sign = 1;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (w[i].d) {
                sign = -sign;
                continue;
            }
            Word v = w;
            v[i].d = true;
            out.add_word(v, c * sign);
        }
    }
    return out;
}

// ---------------------------------------------------------------- contraction

namespace detail {

template <std::size_t K>
void contract_into(const Derivation& theta, const Form<K>& f, auto&& emit) {
    for (const auto& [k, c] : f.terms()) {
        Word w = k.word();
        int sign = 1;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (!w[i].d) continue;
            for (const auto& [p, e] : theta(w[i].arrow).terms()) emit(splice(w, i, p), p, c * e * sign);
            sign = -sign;
        }
    }
}

}  // namespace detail

/// i_θ: DR¹ → DR⁰, i_θ(p·da) = [p·θ(a)].
inline Necklace contract(const Derivation& theta, const OneForm& f) {
    require_same_quiver(theta.quiver(), f.quiver());
    const auto& q = *f.quiver();
    Necklace out(f.quiver());
    detail::contract_into(theta, f, [&](const Word& w, const Path& spliced, const Rational& c) {
        if (w.empty()) {
            out.add_cycle(Path::idempotent(spliced.vertex), c);
            return;
        }
        std::vector<ArrowId> arrows;
        arrows.reserve(w.size());
        for (const auto& l : w) arrows.push_back(l.arrow);
        if (auto p = make_path(q, arrows)) out.add_cycle(*p, c);
    });
    return out;
}

/// i_θ: DR^K → DR^{K-1} for K ≥ 2, a super-derivation with i_θ(da) = θ(a).
template <std::size_t K>
    requires(K >= 2)
Form<K - 1> contract(const Derivation& theta, const Form<K>& f) {
    require_same_quiver(theta.quiver(), f.quiver());
    Form<K - 1> out(f.quiver());
    detail::contract_into(theta, f, [&](const Word& w, const Path&, const Rational& c) { out.add_word(w, c); });
    return out;
}

// ---------------------------------------------------------------- Lie derivative

/// L_θ on DR^K: a derivation with L_θ(a) = θ(a), L_θ(da) = d(θ(a)).
template <std::size_t K>
Form<K> lie_derivative(const Derivation& theta, const Form<K>& f) {
    require_same_quiver(theta.quiver(), f.quiver());
    Form<K> out(f.quiver());
    for (const auto& [k, c] : f.terms()) {
        Word w = k.word();
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto& im = theta(w[i].arrow);
            for (const auto& [p, e] : im.terms()) {
                if (!w[i].d) {
                    out.add_word(detail::splice(w, i, p), c * e);
                    continue;
                }
                Word spliced = detail::splice(w, i, p);
                for (std::size_t l = 0; l < p.length(); ++l) {
                    Word v = spliced;
                    v[i + l].d = true;
                    out.add_word(v, c * e);
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------- symplectic form

/// ω_DR = Σ_{a∈Q} da·da*.
inline TwoForm symplectic_form(const QuiverPtr& q) {
    TwoForm w(q);
    for (ArrowId a = 0; a < q->arrow_count(); a += 2)
        w.add_word({{a, true}, {DoubledQuiver::star(a), true}}, 1);
    return w;
}

/// The unique θ with i_θ(ω_DR) = α, read off slot by slot:
/// i_θ ω_DR = Σ_a θ(a)·da* − θ(a*)·da.
inline Derivation derivation_from_oneform(const OneForm& alpha, const SymplecticData& w) {
    require_same_quiver(alpha.quiver(), w.quiver());
    auto coeffs = oneform_coefficients(alpha);
    Derivation theta(alpha.quiver());
    for (ArrowId b = 0; b < alpha.quiver()->arrow_count(); ++b) {
        const ArrowId bs = DoubledQuiver::star(b);
        theta.set(b, Rational(w.omega(b, bs)) * coeffs[bs]);
    }
    return theta;
}

inline Derivation derivation_from_oneform(const OneForm& alpha) {
    return derivation_from_oneform(alpha, SymplecticData(alpha.quiver()));
}

// ---------------------------------------------------------------- Euler homotopy

/// Splits a form into components of fixed eu-weight (= degree + K).
template <std::size_t K>
std::map<std::size_t, Form<K>> weight_components(const Form<K>& f) {
    std::map<std::size_t, Form<K>> out;
    for (const auto& [k, c] : f.terms()) {
        auto it = out.try_emplace(k.degree() + K, f.quiver()).first;
        it->second.add_key(k, c);
    }
    return out;
}

/// h(β) = Σ_p (1/p)·i_eu(β_p) over eu-weight components; d∘h = id on closed
/// forms of positive weight. Refuses non-closed input.
template <std::size_t K>
auto euler_homotopy(const Form<K>& f) {
    auto df = d(f);
    if (!df.is_zero())
        throw Error(ErrorKind::NotClosed, "form is not d-closed; d(form) = " + to_string(df));
    const Derivation eu = euler_derivation(f.quiver());
    using Result = decltype(contract(eu, f));
    Result out(f.quiver());
    for (const auto& [weight, part] : weight_components(f)) {
        if (weight == 0) throw Error(ErrorKind::ZeroWeight, "weight-0 component has no primitive");
        out += Rational(1, weight) * contract(eu, part);
    }
    return out;
}

}  // namespace ncsg

#endif  // NCSG_FORMS_HPP
