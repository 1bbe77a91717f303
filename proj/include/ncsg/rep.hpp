#ifndef NCSG_REP_HPP
#define NCSG_REP_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncsg/linalg.hpp"
#include "ncsg/necklace.hpp"
#include "ncsg/polynomial.hpp"
#include "ncsg/random.hpp"

namespace ncsg {

/// n_i per vertex, in vertex order.
struct DimensionVector {
    std::vector<std::size_t> n;

    std::size_t operator[](VertexId v) const { return n.at(v); }
    bool operator==(const DimensionVector&) const = default;
};

inline void validate_dims(const DoubledQuiver& q, const DimensionVector& dims) {
    if (dims.n.size() != q.vertex_count())
        throw Error(ErrorKind::ShapeMismatch, "dimension vector has " + std::to_string(dims.n.size()) +
                                                  " entries for " + std::to_string(q.vertex_count()) + " vertices");
    if (std::all_of(dims.n.begin(), dims.n.end(), [](std::size_t k) { return k == 0; }))
        throw Error(ErrorKind::Validation, "dimension vector is identically zero");
}

/// A representation of Q̄: one matrix per arrow a, of shape n_head(a) × n_tail(a).
struct RepPoint {
    QuiverPtr quiver;
    DimensionVector dims;
    std::vector<Matrix> mats;

    const Matrix& operator[](ArrowId a) const { return mats.at(a); }
};

inline void validate_point(const RepPoint& p) {
    const auto& q = *p.quiver;
    validate_dims(q, p.dims);
    if (p.mats.size() != q.arrow_count()) throw Error(ErrorKind::ShapeMismatch, "wrong number of arrow matrices");
    for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        const auto& m = p.mats[a];
        if (m.rows() != p.dims[q.head(a)] || m.cols() != p.dims[q.tail(a)])
            throw Error(ErrorKind::ShapeMismatch, "matrix for '" + q.name(a) + "' is " + m.shape() + ", expected " +
                                                      std::to_string(p.dims[q.head(a)]) + "x" +
                                                      std::to_string(p.dims[q.tail(a)]));
    }
}

inline RepPoint zero_point(const QuiverPtr& q, const DimensionVector& dims) {
    validate_dims(*q, dims);
    RepPoint p{q, dims, {}};
    for (ArrowId a = 0; a < q->arrow_count(); ++a) p.mats.emplace_back(dims[q->head(a)], dims[q->tail(a)]);
    return p;
}

/// Entries uniform in [-box, box].
inline RepPoint random_point(const QuiverPtr& q, const DimensionVector& dims, Rng& rng, std::int64_t box = 3) {
    RepPoint p = zero_point(q, dims);
    for (auto& m : p.mats)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rng.uniform(-box, box);
    return p;
}

/// ρ(a) ↦ g_head(a)·ρ(a)·g_tail(a)⁻¹.
inline RepPoint conjugate(const RepPoint& p, const std::vector<Matrix>& g) {
    const auto& q = *p.quiver;
    std::vector<Matrix> ginv;
    for (const auto& m : g) {
        auto inv = inverse(m);
        if (!inv) throw Error(ErrorKind::Validation, "conjugating matrix is singular");
        ginv.push_back(std::move(*inv));
    }
    RepPoint out = p;
    for (ArrowId a = 0; a < q.arrow_count(); ++a) out.mats[a] = g.at(q.head(a)) * p.mats[a] * ginv.at(q.tail(a));
    return out;
}

/// ρ(p) = ρ(p_1)···ρ(p_k), the identity of V_v for the idempotent at v.
inline Matrix path_matrix(const RepPoint& pt, const Path& p) {
    if (p.empty()) return Matrix::identity(pt.dims[p.vertex]);
    Matrix m = pt.mats[p.arrows.front()];
    for (std::size_t k = 1; k < p.length(); ++k) m = m * pt.mats[p.arrows[k]];
    return m;
}

inline Rational trace_evaluate(const Necklace& f, const RepPoint& pt) {
    require_same_quiver(f.quiver(), pt.quiver);
    validate_point(pt);
    Rational sum = 0;
    for (const auto& [p, c] : f.terms()) sum += c * trace(path_matrix(pt, p));
    return sum;
}

/// Trace of an element of A without first projecting to DR⁰; open paths contribute 0.
inline Rational trace_evaluate(const PathAlgebraElement& f, const RepPoint& pt) {
    require_same_quiver(f.quiver(), pt.quiver);
    validate_point(pt);
    const auto& q = *pt.quiver;
    Rational sum = 0;
    for (const auto& [p, c] : f.terms())
        if (is_closed(q, p)) sum += c * trace(path_matrix(pt, p));
    return sum;
}

// ---------------------------------------------------------------- entry polynomials

/// Indexing of the entry indeterminates ρ(a)_ij at a fixed dimension vector.
class VariableLayout {
public:
    VariableLayout(QuiverPtr q, DimensionVector dims) : quiver_(std::move(q)), dims_(std::move(dims)) {
        validate_dims(*quiver_, dims_);
        std::uint32_t next = 0;
        for (ArrowId a = 0; a < quiver_->arrow_count(); ++a) {
            offset_.push_back(next);
            next += static_cast<std::uint32_t>(rows(a) * cols(a));
        }
        count_ = next;
    }

    const QuiverPtr& quiver() const { return quiver_; }
    const DimensionVector& dims() const { return dims_; }
    std::uint32_t count() const { return count_; }
    std::size_t rows(ArrowId a) const { return dims_[quiver_->head(a)]; }
    std::size_t cols(ArrowId a) const { return dims_[quiver_->tail(a)]; }

    std::uint32_t var(ArrowId a, std::size_t i, std::size_t j) const {
        return offset_[a] + static_cast<std::uint32_t>(i * cols(a) + j);
    }

    /// "x[1,2]" with 1-based indices.
    std::string name(std::uint32_t v) const {
        ArrowId a = 0;
        while (a + 1 < offset_.size() && offset_[a + 1] <= v) ++a;
        const std::size_t k = v - offset_[a];
        return quiver_->name(a) + "[" + std::to_string(k / cols(a) + 1) + "," + std::to_string(k % cols(a) + 1) + "]";
    }

    /// The values of all indeterminates at a point.
    std::vector<Rational> values(const RepPoint& pt) const {
        require_same_quiver(quiver_, pt.quiver);
        if (!(pt.dims == dims_)) throw Error(ErrorKind::ShapeMismatch, "point has a different dimension vector");
        std::vector<Rational> out(count_);
        for (ArrowId a = 0; a < quiver_->arrow_count(); ++a)
            for (std::size_t i = 0; i < rows(a); ++i)
                for (std::size_t j = 0; j < cols(a); ++j) out[var(a, i, j)] = pt.mats[a](i, j);
        return out;
    }

private:
    QuiverPtr quiver_;
    DimensionVector dims_;
    std::vector<std::uint32_t> offset_;
    std::uint32_t count_ = 0;
};

using EntryPolynomial = Polynomial;

inline std::string to_string(const EntryPolynomial& p, const VariableLayout& layout) {
    return to_string(p, [&](std::uint32_t v) { return layout.name(v); });
}

/// tr ρ(f) as a polynomial in the entries:
/// tr(ρ(c_1)···ρ(c_k)) = Σ ρ(c_1)_{i_1 i_2} ρ(c_2)_{i_2 i_3} ··· ρ(c_k)_{i_k i_1}.
inline EntryPolynomial trace_polynomial(const Necklace& f, const VariableLayout& layout) {
    require_same_quiver(f.quiver(), layout.quiver());
    const auto& q = *f.quiver();
    EntryPolynomial out;
    for (const auto& [p, c] : f.terms()) {
        if (p.empty()) {
            out += EntryPolynomial::constant(c * static_cast<unsigned long>(layout.dims()[p.vertex]));
            continue;
        }
        const std::size_t k = p.length();
        std::vector<std::size_t> range(k), idx(k, 0);
        for (std::size_t s = 0; s < k; ++s) range[s] = layout.dims()[q.head(p.arrows[s])];
        if (std::any_of(range.begin(), range.end(), [](std::size_t r) { return r == 0; })) continue;
        Monomial m(k);
        while (true) {
            for (std::size_t s = 0; s < k; ++s) m[s] = layout.var(p.arrows[s], idx[s], idx[(s + 1) % k]);
            out.add_term(m, c);
            std::size_t s = 0;
            while (s < k && ++idx[s] == range[s]) idx[s++] = 0;
            if (s == k) break;
        }
    }
    return out;
}

/// Canonical Poisson bracket on T*Rep: {ρ(a)_ij, ρ(a*)_kl} = δ_il·δ_jk for a ∈ Q,
/// extended as a biderivation. `sign` = −1 gives the deliberately wrong
/// bracket used as a negative control.
inline EntryPolynomial poisson_oracle(const EntryPolynomial& F, const EntryPolynomial& G,
                                      const VariableLayout& layout, int sign = 1) {
    const auto& q = *layout.quiver();
    EntryPolynomial out;
    for (ArrowId a = 0; a < q.arrow_count(); a += 2) {
        const ArrowId as = DoubledQuiver::star(a);
        for (std::size_t i = 0; i < layout.rows(a); ++i)
            for (std::size_t j = 0; j < layout.cols(a); ++j) {
                const auto u = layout.var(a, i, j), v = layout.var(as, j, i);
                auto Fu = F.derivative(u), Gv = G.derivative(v);
                if (!Fu.is_zero() && !Gv.is_zero()) out += Fu * Gv;
                auto Fv = F.derivative(v), Gu = G.derivative(u);
                if (!Fv.is_zero() && !Gu.is_zero()) out -= Fv * Gu;
            }
    }
    if (sign < 0) out *= Rational(-1);
    return out;
}

struct HomomorphismResult {
    bool equal = false;
    EntryPolynomial lhs;       ///< {tr f, tr g} by the oracle
    EntryPolynomial rhs;       ///< tr {f, g}
    EntryPolynomial residual;  ///< lhs − rhs
};

inline HomomorphismResult verify_homomorphism(const Necklace& f, const Necklace& g, const VariableLayout& layout,
                                              int oracle_sign = 1) {
    HomomorphismResult r;
    r.lhs = poisson_oracle(trace_polynomial(f, layout), trace_polynomial(g, layout), layout, oracle_sign);
    r.rhs = trace_polynomial(necklace_bracket(f, g), layout);
    r.residual = r.lhs - r.rhs;
    r.equal = r.residual.is_zero();
    return r;
}

// ---------------------------------------------------------------- moment map

/// μ(ρ)_i, one square matrix per vertex.
using MomentValue = std::vector<Matrix>;

/// μ_i = Σ_{head a = i} ρ(a)ρ(a*) − Σ_{tail a = i} ρ(a*)ρ(a), a ∈ Q.
inline MomentValue moment_map(const RepPoint& pt) {
    validate_point(pt);
    const auto& q = *pt.quiver;
    MomentValue mu;
    for (VertexId v = 0; v < q.vertex_count(); ++v) mu.emplace_back(pt.dims[v], pt.dims[v]);
    for (ArrowId a = 0; a < q.arrow_count(); a += 2) {
        const ArrowId as = DoubledQuiver::star(a);
        mu[q.head(a)] += pt.mats[a] * pt.mats[as];
        mu[q.tail(a)] -= pt.mats[as] * pt.mats[a];
    }
    return mu;
}

/// Matrix with polynomial entries.
using PolyMatrix = std::vector<std::vector<EntryPolynomial>>;

inline PolyMatrix variable_matrix(const VariableLayout& layout, ArrowId a) {
    PolyMatrix m(layout.rows(a), std::vector<EntryPolynomial>(layout.cols(a)));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < layout.cols(a); ++j) m[i][j] = EntryPolynomial::variable(layout.var(a, i, j));
    return m;
}

/// Accumulates s·(A·B) into C.
inline void multiply_add(PolyMatrix& c, const PolyMatrix& a, const PolyMatrix& b, const Rational& s) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += s * (a[i][k] * b[k][j]);
}

/// μ as matrices of entry polynomials.
inline std::vector<PolyMatrix> moment_polynomials(const VariableLayout& layout) {
    const auto& q = *layout.quiver();
    std::vector<PolyMatrix> mu;
    for (VertexId v = 0; v < q.vertex_count(); ++v)
        mu.emplace_back(layout.dims()[v], std::vector<EntryPolynomial>(layout.dims()[v]));
    for (ArrowId a = 0; a < q.arrow_count(); a += 2) {
        const ArrowId as = DoubledQuiver::star(a);
        const auto A = variable_matrix(layout, a), As = variable_matrix(layout, as);
        multiply_add(mu[q.head(a)], A, As, 1);
        multiply_add(mu[q.tail(a)], As, A, -1);
    }
    return mu;
}

/// H_ξ = Σ_i tr(ξ_i·μ_i).
inline EntryPolynomial moment_hamiltonian(const VariableLayout& layout, const std::vector<Matrix>& xi) {
    const auto mu = moment_polynomials(layout);
    EntryPolynomial h;
    for (std::size_t v = 0; v < mu.size(); ++v)
        for (std::size_t i = 0; i < mu[v].size(); ++i)
            for (std::size_t j = 0; j < mu[v].size(); ++j) h += xi.at(v)(i, j) * mu[v][j][i];
    return h;
}

struct HamiltonianCheck {
    bool pass = true;
    std::string detail;  ///< first mismatching entry, if any
};

/// Checks {ρ(a)_kl, H_ξ} = (ξ_head(a)·ρ(a) − ρ(a)·ξ_tail(a))_kl for every
/// arrow of Q̄ and every entry: H_ξ generates the infinitesimal conjugation.
inline HamiltonianCheck check_moment_hamiltonian(const VariableLayout& layout, const std::vector<Matrix>& xi) {
    const auto& q = *layout.quiver();
    for (VertexId v = 0; v < q.vertex_count(); ++v)
        if (xi.at(v).rows() != layout.dims()[v] || !xi.at(v).is_square())
            throw Error(ErrorKind::ShapeMismatch, "xi has the wrong shape at vertex " + q.vertex_name(v));
    const auto h = moment_hamiltonian(layout, xi);
    for (ArrowId a = 0; a < q.arrow_count(); ++a)
        for (std::size_t k = 0; k < layout.rows(a); ++k)
            for (std::size_t l = 0; l < layout.cols(a); ++l) {
                auto lhs = poisson_oracle(EntryPolynomial::variable(layout.var(a, k, l)), h, layout);
                EntryPolynomial rhs;
                const auto& xh = xi[q.head(a)];
                const auto& xt = xi[q.tail(a)];
                for (std::size_t m = 0; m < layout.rows(a); ++m)
                    rhs += xh(k, m) * EntryPolynomial::variable(layout.var(a, m, l));
                for (std::size_t m = 0; m < layout.cols(a); ++m)
                    rhs -= xt(m, l) * EntryPolynomial::variable(layout.var(a, k, m));
                if (!(lhs == rhs))
                    return {false, "entry " + layout.name(layout.var(a, k, l)) + ": bracket " +
                                       to_string(lhs, layout) + " vs action " + to_string(rhs, layout)};
            }
    return {};
}

// ---------------------------------------------------------------- polarization

struct Polarization {
    QuiverPtr quiver;                 ///< base arrows split into copies a_1, a_2, ...
    std::vector<ArrowId> origin;      ///< arrow of the expanded double ↦ arrow of the original double
    std::vector<std::size_t> multiplicity;  ///< per arrow of the original double
    Necklace result;
};

/// Occurrence counts of each arrow of Q̄ in a path.
inline std::vector<std::size_t> arrow_multiplicities(const DoubledQuiver& q, const Path& p) {
    std::vector<std::size_t> m(q.arrow_count(), 0);
    for (ArrowId a : p.arrows) ++m[a];
    return m;
}

/// Full multilinearization: a ↦ Σ_k t_k·a_k for each arrow (copies of a* are
/// the stars a_k*), keeping the coefficient of the product of all t's.
inline Polarization polarize(const Necklace& f) {
    const auto& q = *f.quiver();
    std::optional<std::vector<std::size_t>> mult;
    for (const auto& [p, c] : f.terms()) {
        auto m = arrow_multiplicities(q, p);
        if (mult && *mult != m)
            throw Error(ErrorKind::NotHomogeneous, "necklace is not homogeneous in each arrow");
        mult = std::move(m);
    }
    if (!mult) mult = std::vector<std::size_t>(q.arrow_count(), 0);

    std::vector<ArrowSpec> specs;
    std::vector<ArrowId> origin;
    std::vector<std::vector<ArrowId>> copies(q.arrow_count());  // arrow of Q̄ ↦ its copies in the expanded Q̄
    const auto& base = q.base();
    for (ArrowId a = 0; a < q.arrow_count(); a += 2) {
        const std::size_t count = std::max((*mult)[a], (*mult)[a + 1]);
        for (std::size_t k = 1; k <= count; ++k) {
            const auto& arr = base.arrows()[a / 2];
            copies[a].push_back(static_cast<ArrowId>(2 * specs.size()));
            copies[a + 1].push_back(static_cast<ArrowId>(2 * specs.size() + 1));
            specs.push_back({arr.name + "_" + std::to_string(k), base.vertices()[arr.tail], base.vertices()[arr.head]});
            origin.push_back(a);
            origin.push_back(a + 1);
        }
    }
    auto expanded = double_quiver(Quiver(base.vertices(), specs));
    Polarization out{expanded, origin, *mult, Necklace(expanded)};

    for (const auto& [p, c] : f.terms()) {
        if (p.empty()) {
            out.result.add_cycle(Path::idempotent(p.vertex), c);
            continue;
        }
        // per arrow: positions, and a permutation of copy indices to assign
        std::vector<std::vector<std::size_t>> positions(q.arrow_count());
        for (std::size_t s = 0; s < p.length(); ++s) positions[p.arrows[s]].push_back(s);
        std::vector<std::vector<std::size_t>> perm(q.arrow_count());
        for (ArrowId a = 0; a < q.arrow_count(); ++a)
            for (std::size_t k = 0; k < positions[a].size(); ++k) perm[a].push_back(k);
        while (true) {
            Path r{0, p.arrows};
            for (ArrowId a = 0; a < q.arrow_count(); ++a)
                for (std::size_t k = 0; k < positions[a].size(); ++k) r.arrows[positions[a][k]] = copies[a][perm[a][k]];
            r.vertex = expanded->head(r.arrows.front());
            out.result.add_cycle(r, c);
            // odometer over the product of permutation groups
            ArrowId a = 0;
            while (a < q.arrow_count() && !std::next_permutation(perm[a].begin(), perm[a].end())) ++a;
            if (a == q.arrow_count()) break;
        }
    }
    return out;
}

/// Maps every copy back to its original arrow.
inline Necklace reidentify(const Polarization& pol, const QuiverPtr& original) {
    Necklace out(original);
    for (const auto& [p, c] : pol.result.terms()) {
        Path r = p;
        for (auto& a : r.arrows) a = pol.origin[a];
        if (!r.empty()) r.vertex = original->head(r.arrows.front());
        out.add_cycle(r, c);
    }
    return out;
}

// ---------------------------------------------------------------- trace-kernel probe

enum class ProbeVerdict { Kernel, Witness, Inconclusive, KernelViolation };

inline const char* verdict_name(ProbeVerdict v) {
    switch (v) {
        case ProbeVerdict::Kernel: return "KERNEL";
        case ProbeVerdict::Witness: return "WITNESS";
        case ProbeVerdict::Inconclusive: return "INCONCLUSIVE";
        case ProbeVerdict::KernelViolation: return "KERNEL_VIOLATION";
    }
    return "?";
}

struct ProbeResult {
    ProbeVerdict verdict = ProbeVerdict::Inconclusive;
    std::optional<RepPoint> point;  ///< the witness, or the violating point
    Rational value = 0;             ///< trace at `point`
};

struct ProbeConfig {
    std::size_t max_n = 3;
    std::size_t trials = 20;  ///< random points per n
    std::uint64_t seed = 0;
    std::int64_t box = 3;
};

/// Searches for a point where tr f ≠ 0. Elements of [A, A] are instead
/// checked to vanish at every sampled point. One-vertex quivers only.
inline ProbeResult trace_vanishing_probe(const PathAlgebraElement& f, const ProbeConfig& cfg) {
    const auto& q = f.quiver();
    if (q->vertex_count() != 1) throw Error(ErrorKind::Validation, "trace probe needs a one-vertex quiver");
    const bool in_kernel = project_to_necklace(f).is_zero();
    for (std::size_t n = 1; n <= cfg.max_n; ++n)
        for (std::size_t t = 0; t < cfg.trials; ++t) {
            Rng rng(derive_seed(cfg.seed, "trace-probe/" + std::to_string(n), t));
            RepPoint pt = random_point(q, DimensionVector{{n}}, rng, cfg.box);
            Rational v = trace_evaluate(f, pt);
            if (sgn(v) == 0) continue;
            return {in_kernel ? ProbeVerdict::KernelViolation : ProbeVerdict::Witness, std::move(pt), v};
        }
    return {in_kernel ? ProbeVerdict::Kernel : ProbeVerdict::Inconclusive, std::nullopt, 0};
}

inline ProbeResult trace_vanishing_probe(const Necklace& f, const ProbeConfig& cfg) {
    PathAlgebraElement e(f.quiver());
    for (const auto& [p, c] : f.terms()) e.add_term(p, c);
    return trace_vanishing_probe(e, cfg);
}

}  // namespace ncsg

#endif  // NCSG_REP_HPP
