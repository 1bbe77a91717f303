#ifndef NCSG_CALOGERO_HPP
#define NCSG_CALOGERO_HPP

#include <optional>
#include <vector>

#include "ncsg/enumerate.hpp"
#include "ncsg/rep.hpp"

namespace ncsg {

/// The one-loop quiver with vertex "0" and loop x; its double adds x*.
inline QuiverPtr cm_quiver() { return double_quiver(Quiver({"0"}, {{"x", "0", "0"}})); }

struct CMPoint {
    Matrix X, Y;

    std::size_t n() const { return X.rows(); }
};

inline void require_one_loop(const DoubledQuiver& q) {
    if (q.vertex_count() != 1 || q.arrow_count() != 2)
        throw Error(ErrorKind::Validation, "expected the one-loop quiver (one vertex, one base arrow)");
}

/// [X, Y] + Id.
inline Matrix cm_shifted_commutator(const Matrix& X, const Matrix& Y) {
    if (!X.is_square() || X.rows() != Y.rows() || X.cols() != Y.cols())
        throw Error(ErrorKind::ShapeMismatch, "X is " + X.shape() + ", Y is " + Y.shape());
    return commutator(X, Y) + Matrix::identity(X.rows());
}

/// rank([X,Y] + Id) = 1 and trace([X,Y] + Id) = n.
inline bool cm_membership(const Matrix& X, const Matrix& Y) {
    const Matrix m = cm_shifted_commutator(X, Y);
    return rank(m) == 1 && trace(m) == static_cast<long>(X.rows());
}

/// X = diag(x), Y_ii = p_i, Y_ij = 1/(x_i − x_j).
inline CMPoint cm_point(const std::vector<Rational>& x, const std::vector<Rational>& p) {
    const std::size_t n = x.size();
    if (n == 0) throw Error(ErrorKind::Validation, "empty Calogero-Moser data");
    if (p.size() != n) throw Error(ErrorKind::ShapeMismatch, "x and p have different lengths");
    CMPoint pt{Matrix::diagonal(x), Matrix(n, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                pt.Y(i, i) = p[i];
                continue;
            }
            if (x[i] == x[j])
                throw Error(ErrorKind::Validation, "positions x_" + std::to_string(i + 1) + " and x_" +
                                                       std::to_string(j + 1) + " coincide");
            pt.Y(i, j) = 1 / (x[i] - x[j]);
        }
    if (!cm_membership(pt.X, pt.Y)) throw Error(ErrorKind::Validation, "constructed point fails the rank-one test");
    return pt;
}

inline RepPoint as_rep_point(const QuiverPtr& q, const CMPoint& pt) {
    require_one_loop(*q);
    return RepPoint{q, DimensionVector{{pt.n()}}, {pt.X, pt.Y}};
}

/// ⟨ev(pt), f⟩ = tr f(X, Y).
inline Rational coadjoint_eval(const Necklace& f, const CMPoint& pt) {
    return trace_evaluate(f, as_rep_point(f.quiver(), pt));
}

/// d/dt|₀ tr f(ρ + t·δ): Leibniz over the letters of each cycle.
inline Rational directional_derivative(const Necklace& f, const RepPoint& pt, const RepPoint& delta) {
    require_same_quiver(f.quiver(), pt.quiver);
    validate_point(pt);
    validate_point(delta);
    Rational sum = 0;
    for (const auto& [p, c] : f.terms())
        for (std::size_t k = 0; k < p.length(); ++k) {
            Matrix m = Matrix::identity(pt.dims[p.vertex]);
            for (std::size_t s = 0; s < p.length(); ++s) m = m * (s == k ? delta : pt).mats[p.arrows[s]];
            sum += c * trace(m);
        }
    return sum;
}

struct FlowCheck {
    Rational bracket;     ///< the oracle bracket evaluated at the point
    Rational derivative;  ///< the t-derivative along the explicit flow
    bool equal() const { return bracket == derivative; }
};

/// {tr x², tr f}(X, Y) against d/dt|₀ tr f(X, Y + 2tX).
inline FlowCheck cm_flow_x2(const Necklace& f, const CMPoint& pt) {
    const auto& q = f.quiver();
    auto rp = as_rep_point(q, pt);
    VariableLayout layout(q, rp.dims);
    auto h = trace_polynomial(Necklace::cycle(q, Path{0, {0, 0}}), layout);
    FlowCheck out;
    out.bracket = poisson_oracle(h, trace_polynomial(f, layout), layout).evaluate(layout.values(rp));
    RepPoint delta = zero_point(q, rp.dims);
    delta.mats[1] = Rational(2) * pt.X;
    out.derivative = directional_derivative(f, rp, delta);
    return out;
}

/// {tr f, tr y²}(X, Y) against d/dt|₀ tr f(X + 2tY, Y).
inline FlowCheck cm_flow_y2(const Necklace& f, const CMPoint& pt) {
    const auto& q = f.quiver();
    auto rp = as_rep_point(q, pt);
    VariableLayout layout(q, rp.dims);
    auto h = trace_polynomial(Necklace::cycle(q, Path{0, {1, 1}}), layout);
    FlowCheck out;
    out.bracket = poisson_oracle(trace_polynomial(f, layout), h, layout).evaluate(layout.values(rp));
    RepPoint delta = zero_point(q, rp.dims);
    delta.mats[0] = Rational(2) * pt.Y;
    out.derivative = directional_derivative(f, rp, delta);
    return out;
}

/// First basis necklace of degree ≤ max_degree whose evaluations differ.
inline std::optional<Necklace> separating_necklace(const QuiverPtr& q, const CMPoint& a, const CMPoint& b,
                                                   std::size_t max_degree) {
    require_one_loop(*q);
    PathCatalog cat(q, max_degree);
    for (std::size_t len = 0; len <= max_degree; ++len)
        for (const auto& c : cat.cycles(len)) {
            auto f = Necklace::cycle(q, c);
            if (coadjoint_eval(f, a) != coadjoint_eval(f, b)) return f;
        }
    return std::nullopt;
}

}  // namespace ncsg

#endif  // NCSG_CALOGERO_HPP
