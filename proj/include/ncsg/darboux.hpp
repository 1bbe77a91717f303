#ifndef NCSG_DARBOUX_HPP
#define NCSG_DARBOUX_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ncsg/forms.hpp"
#include "ncsg/linalg.hpp"

namespace ncsg {

/// f·g without the terms longer than max_len.
inline PathAlgebraElement multiply_truncated(const PathAlgebraElement& f, const PathAlgebraElement& g,
                                             std::size_t max_len) {
    require_same_quiver(f.quiver(), g.quiver());
    const auto& q = *f.quiver();
    PathAlgebraElement out(f.quiver());
    for (const auto& [p, c] : f.terms())
        for (const auto& [r, d] : g.terms())
            if (p.length() + r.length() <= max_len)
                if (auto pr = concat(q, p, r)) out.add_term(*pr, c * d);
    return out;
}

/// Image of a path under the algebra map a ↦ images[a], truncated at max_len.
inline PathAlgebraElement substitute(const std::vector<PathAlgebraElement>& images, const QuiverPtr& q,
                                     const Path& p, std::size_t max_len) {
    PathAlgebraElement out = PathAlgebraElement::idempotent(q, p.vertex);
    for (ArrowId a : p.arrows) out = multiply_truncated(out, images.at(a), max_len);
    return out;
}

inline PathAlgebraElement substitute(const std::vector<PathAlgebraElement>& images, const PathAlgebraElement& f,
                                     std::size_t max_len) {
    PathAlgebraElement out(f.quiver());
    for (const auto& [p, c] : f.terms()) out += c * substitute(images, f.quiver(), p, max_len);
    return out;
}

/// Automorphism of the completed free algebra with identity linear part,
/// stored by the generator images truncated at path length N + 1 (so that
/// pullbacks are exact through form degree N).
class FormalAutomorphism {
public:
    FormalAutomorphism(QuiverPtr q, std::size_t n) : quiver_(std::move(q)), n_(n) {
        for (ArrowId a = 0; a < quiver_->arrow_count(); ++a) images_.push_back(PathAlgebraElement::arrow(quiver_, a));
    }
    FormalAutomorphism(QuiverPtr q, std::size_t n, std::vector<PathAlgebraElement> images)
        : quiver_(std::move(q)), n_(n), images_(std::move(images)) {
        if (images_.size() != quiver_->arrow_count())
            throw Error(ErrorKind::Validation, "automorphism needs one image per generator");
        for (ArrowId a = 0; a < images_.size(); ++a) {
            require_same_quiver(quiver_, images_[a].quiver());
            images_[a] = images_[a].truncated(max_length());
            if (!images_[a].homogeneous_part(0).is_zero())
                throw Error(ErrorKind::Validation, "image of '" + quiver_->name(a) + "' has a constant term");
            if (!(images_[a].homogeneous_part(1) == PathAlgebraElement::arrow(quiver_, a)))
                throw Error(ErrorKind::Validation, "image of '" + quiver_->name(a) + "' has a non-identity linear part");
        }
    }

    const QuiverPtr& quiver() const { return quiver_; }
    std::size_t truncation() const { return n_; }
    std::size_t max_length() const { return n_ + 1; }
    const std::vector<PathAlgebraElement>& images() const { return images_; }
    const PathAlgebraElement& operator()(ArrowId a) const { return images_.at(a); }

    bool is_identity() const {
        for (ArrowId a = 0; a < images_.size(); ++a)
            if (!(images_[a] == PathAlgebraElement::arrow(quiver_, a))) return false;
        return true;
    }

    bool operator==(const FormalAutomorphism& o) const {
        return same_quiver(quiver_, o.quiver_) && n_ == o.n_ && images_ == o.images_;
    }

private:
    QuiverPtr quiver_;
    std::size_t n_;
    std::vector<PathAlgebraElement> images_;
};

inline std::string to_string(const FormalAutomorphism& phi) {
    const auto& q = *phi.quiver();
    std::string out = "phi{";
    std::string sep;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        out += sep + q.name(a) + " -> " + to_string(phi(a));
        sep = ", ";
    }
    return out + "}";
}

// ---------------------------------------------------------------- pullback

/// Φ*(f): substitute Φ(a) for a, keep degree ≤ N.
inline Necklace pullback(const FormalAutomorphism& phi, const Necklace& f, std::size_t n) {
    require_same_quiver(phi.quiver(), f.quiver());
    Necklace out(f.quiver());
    for (const auto& [p, c] : f.terms()) {
        const auto image = substitute(phi.images(), f.quiver(), p, n);
        for (const auto& [r, e] : image.terms()) out.add_cycle(r, c * e);
    }
    return out;
}

/// Φ*(β): a ↦ Φ(a), da ↦ d(Φ(a)) by Leibniz, keep degree ≤ N.
template <std::size_t K>
Form<K> pullback(const FormalAutomorphism& phi, const Form<K>& f, std::size_t n) {
    require_same_quiver(phi.quiver(), f.quiver());
    Form<K> out(f.quiver());
    for (const auto& [key, c] : f.terms()) {
        // partial words keyed by letters, with their count of plain letters
        std::map<Word, Rational> partial{{Word{}, c}};
        for (const Letter& l : key.word()) {
            std::map<Word, Rational> next;
            for (const auto& [w, e] : partial) {
                std::size_t plain = 0;
                for (const auto& x : w) plain += x.d ? 0 : 1;
                for (const auto& [p, g] : phi(l.arrow).terms()) {
                    const std::size_t added = l.d ? p.length() - 1 : p.length();
                    if (plain + added > n) continue;
                    if (!l.d) {
                        Word v = w;
                        for (ArrowId a : p.arrows) v.push_back({a, false});
                        next[std::move(v)] += e * g;
                        continue;
                    }
                    for (std::size_t pos = 0; pos < p.length(); ++pos) {
                        Word v = w;
                        for (std::size_t s = 0; s < p.length(); ++s) v.push_back({p.arrows[s], s == pos});
                        next[std::move(v)] += e * g;
                    }
                }
            }
            partial = std::move(next);
        }
        for (const auto& [w, e] : partial)
            if (sgn(e) != 0) out.add_word(w, e);
    }
    return out;
}

/// The algebra map a ↦ Ψ(Φ(a)), so that compose(Φ, Ψ)* = Ψ*∘Φ*.
inline FormalAutomorphism compose(const FormalAutomorphism& phi, const FormalAutomorphism& psi) {
    require_same_quiver(phi.quiver(), psi.quiver());
    const std::size_t n = std::min(phi.truncation(), psi.truncation());
    std::vector<PathAlgebraElement> images;
    for (ArrowId a = 0; a < phi.quiver()->arrow_count(); ++a)
        images.push_back(substitute(psi.images(), phi(a), n + 1));
    return FormalAutomorphism(phi.quiver(), n, std::move(images));
}

/// Compositional inverse through the truncation: Ψ(a) = a − Ψ(Φ(a) − a),
/// iterated to its fixed point; both compositions are checked.
inline FormalAutomorphism inverse(const FormalAutomorphism& phi) {
    const auto& q = phi.quiver();
    const std::size_t len = phi.max_length();
    std::vector<PathAlgebraElement> rest;
    for (ArrowId a = 0; a < q->arrow_count(); ++a) rest.push_back(phi(a) - PathAlgebraElement::arrow(q, a));
    FormalAutomorphism psi(q, phi.truncation());
    // each round fixes one more degree
    for (std::size_t round = 0; round < len; ++round) {
        std::vector<PathAlgebraElement> next;
        for (ArrowId a = 0; a < q->arrow_count(); ++a)
            next.push_back(PathAlgebraElement::arrow(q, a) - substitute(psi.images(), rest[a], len));
        FormalAutomorphism candidate(q, phi.truncation(), std::move(next));
        if (candidate == psi) break;
        psi = std::move(candidate);
    }
    if (!compose(phi, psi).is_identity() || !compose(psi, phi).is_identity())
        throw Error(ErrorKind::Validation, "compositional inverse did not converge");
    return psi;
}

// ---------------------------------------------------------------- t-series

/// Polynomial in a formal parameter t with coefficients of type T.
template <typename T>
class TSeries {
public:
    std::map<std::size_t, T> coefficients;

    void add(std::size_t power, const T& value) {
        auto it = coefficients.find(power);
        if (it == coefficients.end()) coefficients.emplace(power, value);
        else it->second += value;
    }
    std::size_t max_power() const { return coefficients.empty() ? 0 : coefficients.rbegin()->first; }
};

// ---------------------------------------------------------------- normalization

/// Skew matrix W of a constant 2-form Σ W_ab da·db / 2 on the generators:
/// the coefficient of db in i_θ ω₀ is Σ_a W_ab θ(a).
inline Matrix constant_part_matrix(const TwoForm& omega) {
    const auto& q = *omega.quiver();
    Matrix w(q.arrow_count(), q.arrow_count());
    for (const auto& [k, c] : omega.terms()) {
        if (k.degree() != 0) continue;
        w(k.slots[0], k.slots[1]) += c;
        w(k.slots[1], k.slots[0]) -= c;
    }
    return w;
}

struct DarbouxResult {
    FormalAutomorphism phi;
    FormalAutomorphism inverse;
    TwoForm omega0;
    TwoForm residual;  ///< pullback(Φ, ω, N) − ω₀, zero on success
};

/// Finds Φ with Φ*ω = ω₀ through degree N, where ω₀ is the constant part of ω.
/// One-vertex quivers only.
inline DarbouxResult darboux_normalize(const TwoForm& omega, std::size_t n) {
    const auto& q = omega.quiver();
    if (q->vertex_count() != 1)
        throw Error(ErrorKind::Validation, "Darboux normalization is implemented for one-vertex quivers only");
    const TwoForm w = omega.truncated(n);
    if (auto dw = d(w); !dw.is_zero())
        throw Error(ErrorKind::NotClosed, "form is not closed through degree " + std::to_string(n) +
                                              "; d(form) = " + to_string(dw));
    const TwoForm w0 = w.homogeneous_part(0);
    const Matrix W = constant_part_matrix(w0);
    auto Winv = inverse(W.transpose());
    if (!Winv)
        throw Error(ErrorKind::Degenerate,
                    "the constant part of the form is a degenerate bilinear form on the generators; "
                    "no formal Darboux chart exists");
    const TwoForm wp = w - w0;
    const std::size_t len = n + 1;
    const std::size_t gens = q->arrow_count();

    // θ with i_θ ω₀ = β, coefficientwise θ = (Wᵀ)⁻¹ β
    auto solve = [&](const OneForm& beta) {
        auto coeff = oneform_coefficients(beta);
        Derivation theta(q);
        for (ArrowId a = 0; a < gens; ++a) {
            PathAlgebraElement im(q);
            for (ArrowId b = 0; b < gens; ++b)
                if (sgn((*Winv)(a, b)) != 0) im += (*Winv)(a, b) * coeff[b];
            theta.set(a, im.truncated(len));
        }
        return theta;
    };

    // θ_t = Σ t^k θ^(k) with i_{θ_t}(ω₀ + t·ω') = α
    TSeries<Derivation> theta_t;
    if (!wp.is_zero()) {
        const OneForm alpha = -euler_homotopy(wp);
        Derivation th = solve(alpha);
        for (std::size_t k = 0; !th.is_zero() && k <= n; ++k) {
            theta_t.add(k, th);
            th = solve(-contract(th, wp).truncated(len));
        }
    }

    // Φ_t(a) = a + ∫₀ᵗ Φ_s(θ_s(a)) ds by Picard iteration on t-polynomials
    using TPoly = TSeries<PathAlgebraElement>;
    auto mul = [&](const TPoly& f, const TPoly& g) {
        TPoly out;
        for (const auto& [i, x] : f.coefficients)
            for (const auto& [j, y] : g.coefficients) {
                auto xy = multiply_truncated(x, y, len);
                if (!xy.is_zero()) out.add(i + j, xy);
            }
        return out;
    };
    std::vector<TPoly> flow(gens);
    for (ArrowId a = 0; a < gens; ++a) flow[a].add(0, PathAlgebraElement::arrow(q, a));
    for (std::size_t round = 0; round < len && !theta_t.coefficients.empty(); ++round) {
        std::vector<TPoly> next(gens);
        for (ArrowId a = 0; a < gens; ++a) {
            next[a].add(0, PathAlgebraElement::arrow(q, a));
            for (const auto& [k, th] : theta_t.coefficients)
                for (const auto& [p, c] : th(a).terms()) {
                    TPoly prod;
                    prod.add(0, PathAlgebraElement::idempotent(q, p.vertex));
                    for (ArrowId b : p.arrows) prod = mul(prod, flow[b]);
                    for (const auto& [j, v] : prod.coefficients)
                        next[a].add(k + j + 1, (c / static_cast<unsigned long>(k + j + 1)) * v);
                }
        }
        flow = std::move(next);
    }

    std::vector<PathAlgebraElement> images;
    for (ArrowId a = 0; a < gens; ++a) {
        PathAlgebraElement at_one(q);
        for (const auto& [j, v] : flow[a].coefficients) at_one += v;
        images.push_back(at_one.truncated(len));
    }
    FormalAutomorphism phi(q, n, std::move(images));
    TwoForm residual = pullback(phi, omega, n) - w0;
    if (!residual.is_zero())
        throw Error(ErrorKind::Validation, "Darboux certificate failed; residual = " + to_string(residual));
    FormalAutomorphism psi = inverse(phi);
    return {std::move(phi), std::move(psi), w0, std::move(residual)};
}

}  // namespace ncsg

#endif  // NCSG_DARBOUX_HPP
