#ifndef NCSG_QUIVER_HPP
#define NCSG_QUIVER_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncsg/error.hpp"
#include "ncsg/linear_combination.hpp"
#include "ncsg/rational.hpp"

namespace ncsg {

using VertexId = std::uint32_t;
using ArrowId = std::uint32_t;

/// Suffix reserved for the reverse arrow a* of a base arrow a.
inline constexpr char kStarSuffix = '*';

struct ArrowSpec {
    std::string name;
    std::string tail;
    std::string head;
};

struct Arrow {
    std::string name;
    VertexId tail = 0;
    VertexId head = 0;

    bool operator==(const Arrow&) const = default;
};

namespace detail {

inline bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    auto ok_first = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto ok_rest = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (!ok_first(s.front())) return false;
    return std::all_of(s.begin() + 1, s.end(), ok_rest);
}

}  // namespace detail

/// A finite quiver: ordered vertices and ordered, uniquely named arrows.
class Quiver {
public:
    Quiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows)
        : vertices_(std::move(vertices)) {
        for (VertexId i = 0; i < vertices_.size(); ++i) {
            if (vertices_[i].empty()) throw Error(ErrorKind::Validation, "empty vertex identifier");
            if (!vertex_index_.emplace(vertices_[i], i).second)
                throw Error(ErrorKind::Validation, "duplicate vertex '" + vertices_[i] + "'");
        }
        std::unordered_map<std::string, ArrowId> seen;
        for (const auto& spec : arrows) {
            if (spec.name.find(kStarSuffix) != std::string::npos)
                throw Error(ErrorKind::Validation,
                            "arrow name '" + spec.name + "' uses the reserved star suffix");
            if (!detail::valid_identifier(spec.name))
                throw Error(ErrorKind::Validation, "arrow name '" + spec.name + "' is not an identifier");
            if (!seen.emplace(spec.name, static_cast<ArrowId>(arrows_.size())).second)
                throw Error(ErrorKind::Validation, "duplicate arrow name '" + spec.name + "'");
            arrows_.push_back({spec.name, vertex(spec.tail), vertex(spec.head)});
        }
    }

    VertexId vertex(const std::string& name) const {
        auto it = vertex_index_.find(name);
        if (it == vertex_index_.end()) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + name + "'");
        return it->second;
    }

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }

    bool operator==(const Quiver& o) const { return vertices_ == o.vertices_ && arrows_ == o.arrows_; }

private:
    std::vector<std::string> vertices_;
    std::unordered_map<std::string, VertexId> vertex_index_;
    std::vector<Arrow> arrows_;
};

/// The double Q̄ of a quiver. Arrows are interleaved: index 2k is the k-th base
/// arrow a, index 2k+1 its reverse a*, so star(i) == i ^ 1.
class DoubledQuiver {
public:
    explicit DoubledQuiver(Quiver base) : base_(std::move(base)) {
        for (const auto& a : base_.arrows()) {
            arrows_.push_back(a);
            arrows_.push_back({a.name + kStarSuffix, a.head, a.tail});
        }
        for (ArrowId i = 0; i < arrows_.size(); ++i) index_.emplace(arrows_[i].name, i);
    }

    const Quiver& base() const { return base_; }
    std::size_t vertex_count() const { return base_.vertices().size(); }
    std::size_t arrow_count() const { return arrows_.size(); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
    const std::string& name(ArrowId a) const { return arrows_.at(a).name; }
    const std::string& vertex_name(VertexId v) const { return base_.vertices().at(v); }
    VertexId tail(ArrowId a) const { return arrows_[a].tail; }
    VertexId head(ArrowId a) const { return arrows_[a].head; }

    static constexpr ArrowId star(ArrowId a) { return a ^ 1U; }
    static constexpr bool is_base(ArrowId a) { return (a & 1U) == 0; }

    std::optional<ArrowId> find_arrow(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    ArrowId arrow_id(const std::string& name) const {
        if (auto a = find_arrow(name)) return *a;
        throw Error(ErrorKind::UnknownArrow, "unknown arrow '" + name + "'");
    }

    bool operator==(const DoubledQuiver& o) const { return base_ == o.base_; }

private:
    Quiver base_;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, ArrowId> index_;
};

using QuiverPtr = std::shared_ptr<const DoubledQuiver>;

inline QuiverPtr double_quiver(const Quiver& q) { return std::make_shared<const DoubledQuiver>(q); }

inline bool same_quiver(const QuiverPtr& a, const QuiverPtr& b) { return a == b || (a && b && *a == *b); }

inline void require_same_quiver(const QuiverPtr& a, const QuiverPtr& b) {
    if (!same_quiver(a, b)) throw Error(ErrorKind::QuiverMismatch, "operands live over different quivers");
}

/// A path in Q̄, written as a product of arrows composed right to left:
/// arrows = (a_k, ..., a_1) stands for a_k···a_1, and a_1 is applied first.
/// `vertex` is the head of the path; for the empty path it names the idempotent.
struct Path {
    VertexId vertex = 0;
    std::vector<ArrowId> arrows;

    std::size_t length() const { return arrows.size(); }
    bool empty() const { return arrows.empty(); }

    static Path idempotent(VertexId v) { return {v, {}}; }

    bool operator==(const Path&) const = default;
};

/// Shorter paths first, then lexicographic on arrow indices.
inline bool operator<(const Path& p, const Path& q) {
    if (p.arrows.size() != q.arrows.size()) return p.arrows.size() < q.arrows.size();
    if (p.arrows != q.arrows) return p.arrows < q.arrows;
    return p.vertex < q.vertex;
}

inline VertexId head(const Path& p) { return p.vertex; }
inline VertexId tail(const DoubledQuiver& q, const Path& p) {
    return p.empty() ? p.vertex : q.tail(p.arrows.back());
}
inline bool is_closed(const DoubledQuiver& q, const Path& p) { return head(p) == tail(q, p); }

/// Builds a path from arrows written left to right; nullopt if not composable.
inline std::optional<Path> make_path(const DoubledQuiver& q, std::span<const ArrowId> arrows) {
    if (arrows.empty()) return std::nullopt;
    for (std::size_t i = 0; i + 1 < arrows.size(); ++i)
        if (q.tail(arrows[i]) != q.head(arrows[i + 1])) return std::nullopt;
    return Path{q.head(arrows.front()), {arrows.begin(), arrows.end()}};
}

inline Path arrow_path(const DoubledQuiver& q, ArrowId a) { return Path{q.head(a), {a}}; }

/// p·r, or nullopt when tail(p) != head(r).
inline std::optional<Path> concat(const DoubledQuiver& q, const Path& p, const Path& r) {
    if (tail(q, p) != head(r)) return std::nullopt;
    if (p.empty()) return r;
    Path out = p;
    out.arrows.insert(out.arrows.end(), r.arrows.begin(), r.arrows.end());
    return out;
}

/// Sub-path arrows[first, last) of a path; empty ranges become the idempotent
/// at `empty_vertex`.
inline Path subpath(const DoubledQuiver& q, const Path& p, std::size_t first, std::size_t last,
                    VertexId empty_vertex) {
    if (first >= last) return Path::idempotent(empty_vertex);
    return Path{q.head(p.arrows[first]), {p.arrows.begin() + first, p.arrows.begin() + last}};
}

inline std::string format_path(const DoubledQuiver& q, const Path& p) {
    if (p.empty()) return "e(" + q.vertex_name(p.vertex) + ")";
    std::string out;
    for (std::size_t i = 0; i < p.arrows.size(); ++i) {
        if (i) out += ' ';
        out += q.name(p.arrows[i]);
    }
    return out;
}

/// Element of the path algebra A = T_B(E_Q̄) with exact rational coefficients.
class PathAlgebraElement {
public:
    using Terms = LinearCombination<Path>;

    explicit PathAlgebraElement(QuiverPtr q) : quiver_(std::move(q)) {}
    PathAlgebraElement(QuiverPtr q, Terms terms) : quiver_(std::move(q)), terms_(std::move(terms)) {}

    static PathAlgebraElement zero(QuiverPtr q) { return PathAlgebraElement(std::move(q)); }
    static PathAlgebraElement idempotent(QuiverPtr q, VertexId v, const Rational& c = 1) {
        if (v >= q->vertex_count()) throw Error(ErrorKind::UnknownVertex, "vertex index out of range");
        PathAlgebraElement e(std::move(q));
        e.terms_.add(Path::idempotent(v), c);
        return e;
    }
    /// Σ_i 1_i, the unit of A.
    static PathAlgebraElement unit(QuiverPtr q) {
        PathAlgebraElement e(q);
        for (VertexId v = 0; v < q->vertex_count(); ++v) e.terms_.add(Path::idempotent(v), 1);
        return e;
    }
    static PathAlgebraElement arrow(QuiverPtr q, ArrowId a, const Rational& c = 1) {
        PathAlgebraElement e(q);
        e.terms_.add(arrow_path(*q, a), c);
        return e;
    }
    static PathAlgebraElement arrow(QuiverPtr q, const std::string& name) {
        ArrowId a = q->arrow_id(name);
        return arrow(std::move(q), a);
    }
    static PathAlgebraElement path(QuiverPtr q, Path p, const Rational& c = 1) {
        PathAlgebraElement e(std::move(q));
        e.terms_.add(std::move(p), c);
        return e;
    }

    const QuiverPtr& quiver() const { return quiver_; }
    const Terms& terms() const { return terms_; }
    Terms& mutable_terms() { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Path& p, const Rational& c) { terms_.add(p, c); }

    PathAlgebraElement& operator+=(const PathAlgebraElement& o) {
        require_same_quiver(quiver_, o.quiver_);
        terms_ += o.terms_;
        return *this;
    }
    PathAlgebraElement& operator-=(const PathAlgebraElement& o) {
        require_same_quiver(quiver_, o.quiver_);
        terms_ -= o.terms_;
        return *this;
    }
    PathAlgebraElement& operator*=(const Rational& s) {
        terms_ *= s;
        return *this;
    }

    friend PathAlgebraElement operator+(PathAlgebraElement a, const PathAlgebraElement& b) { return a += b; }
    friend PathAlgebraElement operator-(PathAlgebraElement a, const PathAlgebraElement& b) { return a -= b; }
    friend PathAlgebraElement operator-(PathAlgebraElement a) { return a *= Rational(-1); }
    friend PathAlgebraElement operator*(const Rational& s, PathAlgebraElement a) { return a *= s; }

    friend PathAlgebraElement operator*(const PathAlgebraElement& f, const PathAlgebraElement& g) {
        require_same_quiver(f.quiver_, g.quiver_);
        PathAlgebraElement out(f.quiver_);
        const auto& q = *f.quiver_;
        for (const auto& [p, c] : f.terms_)
            for (const auto& [r, d] : g.terms_)
                if (auto pr = concat(q, p, r)) out.terms_.add(std::move(*pr), c * d);
        return out;
    }

    bool operator==(const PathAlgebraElement& o) const {
        return same_quiver(quiver_, o.quiver_) && terms_ == o.terms_;
    }

    /// Highest path length among the terms; -1 for zero.
    int degree() const {
        int d = -1;
        for (const auto& [p, c] : terms_) d = std::max(d, static_cast<int>(p.length()));
        return d;
    }
    PathAlgebraElement homogeneous_part(std::size_t deg) const {
        return {quiver_, terms_.filtered([deg](const Path& p) { return p.length() == deg; })};
    }
    PathAlgebraElement truncated(std::size_t max_deg) const {
        return {quiver_, terms_.filtered([max_deg](const Path& p) { return p.length() <= max_deg; })};
    }

private:
    QuiverPtr quiver_;
    Terms terms_;
};

/// Product of two basis paths; zero when they do not compose.
inline PathAlgebraElement compose_paths(const QuiverPtr& q, const Path& p, const Path& r) {
    PathAlgebraElement out(q);
    if (auto pr = concat(*q, p, r)) out.add_term(*pr, 1);
    return out;
}

enum class AlgebraOp { Add, Scale, Multiply };

/// Uniform entry point over the three ring operations.
inline PathAlgebraElement algebra_combine(AlgebraOp op, const PathAlgebraElement& f,
                                          const PathAlgebraElement& g) {
    switch (op) {
        case AlgebraOp::Add: return f + g;
        case AlgebraOp::Multiply: return f * g;
        case AlgebraOp::Scale: break;
    }
    throw Error(ErrorKind::Validation, "scale takes a rational operand");
}

inline PathAlgebraElement algebra_combine(AlgebraOp op, const PathAlgebraElement& f, const Rational& s) {
    if (op != AlgebraOp::Scale) throw Error(ErrorKind::Validation, "only scale takes a rational operand");
    return s * f;
}

inline std::string format_coefficient_prefix(const Rational& c, bool first) {
    std::string out;
    Rational a = abs(c);
    if (sgn(c) < 0) out = first ? "-" : " - ";
    else if (!first) out = " + ";
    if (a != 1) out += to_string(a) + " ";
    return out;
}

inline std::string to_string(const PathAlgebraElement& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, c] : f.terms()) {
        out += format_coefficient_prefix(c, first) + format_path(*f.quiver(), p);
        first = false;
    }
    return out;
}

}  // namespace ncsg

#endif  // NCSG_QUIVER_HPP
