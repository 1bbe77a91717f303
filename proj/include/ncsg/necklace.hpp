#ifndef NCSG_NECKLACE_HPP
#define NCSG_NECKLACE_HPP

#include <string>
#include <utility>
#include <vector>

#include "ncsg/quiver.hpp"

namespace ncsg {

namespace detail {

/// Offset of the lexicographically minimal rotation of a word. O(L²).
inline std::size_t min_rotation_offset(const std::vector<ArrowId>& w) {
    const std::size_t n = w.size();
    std::size_t best = 0;
    for (std::size_t r = 1; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            ArrowId x = w[(r + k) % n], y = w[(best + k) % n];
            if (x != y) {
                if (x < y) best = r;
                break;
            }
        }
    }
    return best;
}

}  // namespace detail

/// Minimal rotation of a closed path under the path order.
inline Path canonical_rotation(const DoubledQuiver& q, const Path& closed) {
    const std::size_t n = closed.length();
    const std::size_t best = n <= 1 ? 0 : detail::min_rotation_offset(closed.arrows);
    if (best == 0) return closed;
    Path out;
    out.arrows.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.arrows.push_back(closed.arrows[(best + k) % n]);
    out.vertex = q.head(out.arrows.front());
    return out;
}

/// Element of DR⁰ = A/[A,A]: canonical cycles plus a per-vertex degree-0 part
/// (stored as idempotent paths).
class Necklace {
public:
    using Terms = LinearCombination<Path>;

    explicit Necklace(QuiverPtr q) : quiver_(std::move(q)) {}

    static Necklace cycle(QuiverPtr q, const Path& closed, const Rational& c = 1) {
        Necklace n(std::move(q));
        n.add_cycle(closed, c);
        return n;
    }
    static Necklace vertex(QuiverPtr q, VertexId v, const Rational& c = 1) {
        Necklace n(std::move(q));
        n.add_cycle(Path::idempotent(v), c);
        return n;
    }

    /// Adds c·[p]; open paths are commutators with idempotents and vanish.
    void add_cycle(const Path& p, const Rational& c) {
        if (!is_closed(*quiver_, p)) return;
        terms_.add(canonical_rotation(*quiver_, p), c);
    }
    /// For callers that already produced the canonical representative.
    void insert_canonical(Path p, const Rational& c) { terms_.add(std::move(p), c); }

    const QuiverPtr& quiver() const { return quiver_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational degree0(VertexId v) const { return terms_.coeff(Path::idempotent(v)); }

    int degree() const {
        int d = -1;
        for (const auto& [p, c] : terms_) d = std::max(d, static_cast<int>(p.length()));
        return d;
    }
    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        std::size_t d = terms_.begin()->first.length();
        for (const auto& [p, c] : terms_)
            if (p.length() != d) return false;
        return true;
    }
    Necklace homogeneous_part(std::size_t deg) const {
        Necklace n(quiver_);
        n.terms_ = terms_.filtered([deg](const Path& p) { return p.length() == deg; });
        return n;
    }
    Necklace truncated(std::size_t max_deg) const {
        Necklace n(quiver_);
        n.terms_ = terms_.filtered([max_deg](const Path& p) { return p.length() <= max_deg; });
        return n;
    }

    Necklace& operator+=(const Necklace& o) {
        require_same_quiver(quiver_, o.quiver_);
        terms_ += o.terms_;
        return *this;
    }
    Necklace& operator-=(const Necklace& o) {
        require_same_quiver(quiver_, o.quiver_);
        terms_ -= o.terms_;
        return *this;
    }
    Necklace& operator*=(const Rational& s) {
        terms_ *= s;
        return *this;
    }
    friend Necklace operator+(Necklace a, const Necklace& b) { return a += b; }
    friend Necklace operator-(Necklace a, const Necklace& b) { return a -= b; }
    friend Necklace operator-(Necklace a) { return a *= Rational(-1); }
    friend Necklace operator*(const Rational& s, Necklace a) { return a *= s; }

    bool operator==(const Necklace& o) const { return same_quiver(quiver_, o.quiver_) && terms_ == o.terms_; }

private:
    QuiverPtr quiver_;
    Terms terms_;
};

inline Necklace project_to_necklace(const PathAlgebraElement& f) {
    Necklace n(f.quiver());
    for (const auto& [p, c] : f.terms()) n.add_cycle(p, c);
    return n;
}

inline std::string to_string(const Necklace& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : f.terms()) {
        out += format_coefficient_prefix(c, first) + "cyc(" + format_path(*f.quiver(), p) + ")";
        first = false;
    }
    return out;
}

/// The remainder of a cycle after removing position k: the path that starts
/// right after c_k and ends right before it (cyclically).
inline Path cycle_remainder(const DoubledQuiver& q, const Path& cycle, std::size_t k) {
    const auto& w = cycle.arrows;
    const std::size_t n = w.size();
    Path out;
    out.arrows.reserve(n - 1);
    for (std::size_t j = 1; j < n; ++j) out.arrows.push_back(w[(k + j) % n]);
    out.vertex = out.arrows.empty() ? q.tail(w[k]) : q.head(out.arrows.front());
    return out;
}

/// ∂f/∂a: for each occurrence of a in each cycle, the unwound remainder.
/// Lies in 1_{tail(a)}·A·1_{head(a)}.
inline PathAlgebraElement cyclic_derivative(const Necklace& f, ArrowId a) {
    const auto& q = *f.quiver();
    if (a >= q.arrow_count()) throw Error(ErrorKind::UnknownArrow, "arrow index out of range");
    PathAlgebraElement out(f.quiver());
    for (const auto& [p, c] : f.terms())
        for (std::size_t k = 0; k < p.length(); ++k)
            if (p.arrows[k] == a) out.add_term(cycle_remainder(q, p, k), c);
    return out;
}

inline PathAlgebraElement cyclic_derivative(const Necklace& f, const std::string& arrow) {
    return cyclic_derivative(f, f.quiver()->arrow_id(arrow));
}

/// The constant symplectic pairing on generators: ω(a, a*) = 1, ω(a*, a) = -1.
class SymplecticData {
public:
    explicit SymplecticData(QuiverPtr q) : quiver_(std::move(q)) {}

    const QuiverPtr& quiver() const { return quiver_; }

    int omega(ArrowId a, ArrowId b) const {
        if (b != DoubledQuiver::star(a)) return 0;
        return DoubledQuiver::is_base(a) ? 1 : -1;
    }

private:
    QuiverPtr quiver_;
};

/// {f, g} = Σ_{a∈Q} ∂f/∂a·∂g/∂a* − ∂f/∂a*·∂g/∂a  mod [A, A].
inline Necklace necklace_bracket(const Necklace& f, const Necklace& g, const SymplecticData& w) {
    require_same_quiver(f.quiver(), g.quiver());
    require_same_quiver(f.quiver(), w.quiver());
    const auto& q = *f.quiver();
    PathAlgebraElement sum(f.quiver());
    for (ArrowId a = 0; a < q.arrow_count(); a += 2) {
        const ArrowId as = DoubledQuiver::star(a);
        auto fa = cyclic_derivative(f, a);
        auto fas = cyclic_derivative(f, as);
        if (fa.is_zero() && fas.is_zero()) continue;
        sum += fa * cyclic_derivative(g, as);
        sum -= fas * cyclic_derivative(g, a);
    }
    return project_to_necklace(sum);
}

inline Necklace necklace_bracket(const Necklace& f, const Necklace& g) {
    return necklace_bracket(f, g, SymplecticData(f.quiver()));
}

/// B-linear derivation of A, stored by its values on arrows.
class Derivation {
public:
    explicit Derivation(QuiverPtr q) : quiver_(std::move(q)) {
        images_.assign(quiver_->arrow_count(), PathAlgebraElement(quiver_));
    }

    /// Every term of the image must run parallel to the arrow.
    void set(ArrowId a, PathAlgebraElement image) {
        require_same_quiver(quiver_, image.quiver());
        const auto& q = *quiver_;
        for (const auto& [p, c] : image.terms())
            if (head(p) != q.head(a) || tail(q, p) != q.tail(a))
                throw Error(ErrorKind::NotComposable,
                            "image of '" + q.name(a) + "' has a term not parallel to the arrow");
        images_.at(a) = std::move(image);
    }
    void set(const std::string& arrow, PathAlgebraElement image) { set(quiver_->arrow_id(arrow), std::move(image)); }

    const PathAlgebraElement& operator()(ArrowId a) const { return images_.at(a); }
    const PathAlgebraElement& image(ArrowId a) const { return images_.at(a); }
    const QuiverPtr& quiver() const { return quiver_; }

    bool is_zero() const {
        for (const auto& im : images_)
            if (!im.is_zero()) return false;
        return true;
    }

    /// Leibniz extension to a path: Σ_k p_<k · θ(p_k) · p_>k.
    PathAlgebraElement apply(const Path& p) const {
        const auto& q = *quiver_;
        PathAlgebraElement out(quiver_);
        for (std::size_t k = 0; k < p.length(); ++k) {
            const auto& im = images_[p.arrows[k]];
            if (im.is_zero()) continue;
            Path left = subpath(q, p, 0, k, head(p));
            Path right = subpath(q, p, k + 1, p.length(), q.tail(p.arrows[k]));
            for (const auto& [w, c] : im.terms()) {
                auto lw = concat(q, left, w);
                if (!lw) continue;
                if (auto full = concat(q, *lw, right)) out.add_term(*full, c);
            }
        }
        return out;
    }
    PathAlgebraElement apply(const PathAlgebraElement& f) const {
        require_same_quiver(quiver_, f.quiver());
        PathAlgebraElement out(quiver_);
        for (const auto& [p, c] : f.terms()) out += c * apply(p);
        return out;
    }

    Derivation& operator+=(const Derivation& o) {
        require_same_quiver(quiver_, o.quiver_);
        for (std::size_t a = 0; a < images_.size(); ++a) images_[a] += o.images_[a];
        return *this;
    }
    Derivation& operator-=(const Derivation& o) {
        require_same_quiver(quiver_, o.quiver_);
        for (std::size_t a = 0; a < images_.size(); ++a) images_[a] -= o.images_[a];
        return *this;
    }
    Derivation& operator*=(const Rational& s) {
        for (auto& im : images_) im *= s;
        return *this;
    }
    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
    friend Derivation operator-(Derivation a) { return a *= Rational(-1); }
    friend Derivation operator*(const Rational& s, Derivation a) { return a *= s; }

    bool operator==(const Derivation& o) const {
        return same_quiver(quiver_, o.quiver_) && images_ == o.images_;
    }

    Derivation truncated(std::size_t max_deg) const {
        Derivation out(quiver_);
        for (std::size_t a = 0; a < images_.size(); ++a) out.images_[a] = images_[a].truncated(max_deg);
        return out;
    }

private:
    QuiverPtr quiver_;
    std::vector<PathAlgebraElement> images_;
};

/// [θ, γ] = θ∘γ − γ∘θ.
inline Derivation commutator(const Derivation& theta, const Derivation& gamma) {
    require_same_quiver(theta.quiver(), gamma.quiver());
    Derivation out(theta.quiver());
    for (ArrowId a = 0; a < theta.quiver()->arrow_count(); ++a)
        out.set(a, theta.apply(gamma(a)) - gamma.apply(theta(a)));
    return out;
}

/// The Euler derivation eu(a) = a.
inline Derivation euler_derivation(const QuiverPtr& q) {
    Derivation eu(q);
    for (ArrowId a = 0; a < q->arrow_count(); ++a) eu.set(a, PathAlgebraElement::arrow(q, a));
    return eu;
}

inline std::string to_string(const Derivation& theta) {
    const auto& q = *theta.quiver();
    std::string out = "theta{";
    bool first = true;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        if (theta(a).is_zero()) continue;
        if (!first) out += ", ";
        out += q.name(a) + " -> " + to_string(theta(a));
        first = false;
    }
    return out + "}";
}

/// L_θ on DR⁰: substitute θ into each letter of each cycle.
inline Necklace lie_derivative(const Derivation& theta, const Necklace& f) {
    require_same_quiver(theta.quiver(), f.quiver());
    const auto& q = *f.quiver();
    PathAlgebraElement sum(f.quiver());
    for (const auto& [p, c] : f.terms())
        for (std::size_t k = 0; k < p.length(); ++k) {
            const auto& im = theta(p.arrows[k]);
            if (im.is_zero()) continue;
            Path rest = cycle_remainder(q, p, k);
            for (const auto& [w, d] : im.terms())
                if (auto full = concat(q, w, rest)) sum.add_term(*full, c * d);
        }
    return project_to_necklace(sum);
}

/// θ_f, normalized so that L_{θ_f} g = {f, g} and [θ_f, θ_g] = θ_{f,g}:
/// θ_f(a) = −∂f/∂a*, θ_f(a*) = ∂f/∂a for a ∈ Q.
inline Derivation hamiltonian_derivation(const Necklace& f, const SymplecticData& w) {
    require_same_quiver(f.quiver(), w.quiver());
    Derivation theta(f.quiver());
    for (ArrowId b = 0; b < f.quiver()->arrow_count(); ++b) {
        const ArrowId bs = DoubledQuiver::star(b);
        theta.set(b, Rational(-w.omega(b, bs)) * cyclic_derivative(f, bs));
    }
    return theta;
}

inline Derivation hamiltonian_derivation(const Necklace& f) {
    return hamiltonian_derivation(f, SymplecticData(f.quiver()));
}

}  // namespace ncsg

#endif  // NCSG_NECKLACE_HPP
