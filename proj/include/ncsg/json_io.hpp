#ifndef NCSG_JSON_IO_HPP
#define NCSG_JSON_IO_HPP

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ncsg/calogero.hpp"
#include "ncsg/dsl.hpp"
#include "ncsg/rep.hpp"

namespace ncsg {

using json = nlohmann::ordered_json;

inline std::string json_scalar_string(const json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw Error(ErrorKind::Validation, "expected a string or integer, got " + j.dump());
}

// ---------------------------------------------------------------- quivers

/// {"vertices": [...], "arrows": [{"name": .., "tail": .., "head": ..}, ...]}.
/// Entries with "base": false (as printed for a doubled quiver) are skipped.
inline QuiverPtr quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw Error(ErrorKind::Validation, "quiver JSON needs 'vertices' and 'arrows'");
    std::vector<std::string> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(json_scalar_string(v));
    std::vector<ArrowSpec> arrows;
    for (const auto& a : j.at("arrows")) {
        if (a.value("base", true) == false) continue;
        if (!a.contains("name") || !a.contains("tail") || !a.contains("head"))
            throw Error(ErrorKind::Validation, "arrow needs 'name', 'tail' and 'head': " + a.dump());
        arrows.push_back({a.at("name").get<std::string>(), json_scalar_string(a.at("tail")),
                          json_scalar_string(a.at("head"))});
    }
    return double_quiver(Quiver(std::move(vertices), arrows));
}

inline json quiver_to_json(const DoubledQuiver& q) {
    json j;
    j["vertices"] = q.base().vertices();
    json arrows = json::array();
    for (ArrowId a = 0; a < q.arrow_count(); ++a)
        arrows.push_back({{"name", q.name(a)},
                          {"tail", q.vertex_name(q.tail(a))},
                          {"head", q.vertex_name(q.head(a))},
                          {"star", q.name(DoubledQuiver::star(a))},
                          {"base", DoubledQuiver::is_base(a)}});
    j["arrows"] = arrows;
    return j;
}

// ---------------------------------------------------------------- numbers and matrices

inline json to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) { return parse_rational(json_scalar_string(j)); }

inline json to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

inline Matrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const std::string& what) {
    if (!j.is_array() || j.size() != rows)
        throw Error(ErrorKind::ShapeMismatch, what + " must have " + std::to_string(rows) + " rows");
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw Error(ErrorKind::ShapeMismatch, what + " row " + std::to_string(i + 1) + " must have " +
                                                      std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(i, c) = rational_from_json(j[i][c]);
    }
    return m;
}

/// Square matrix of any size.
inline Matrix matrix_from_json(const json& j, const std::string& what) {
    if (!j.is_array()) throw Error(ErrorKind::ShapeMismatch, what + " must be an array of rows");
    return matrix_from_json(j, j.size(), j.empty() ? 0 : j[0].size(), what);
}

// ---------------------------------------------------------------- dimension vectors and points

/// "2" (every vertex) or "2,1" (one entry per vertex).
inline DimensionVector parse_dims(const std::string& text, const DoubledQuiver& q) {
    DimensionVector dims;
    std::stringstream in(text);
    for (std::string tok; std::getline(in, tok, ',');) {
        try {
            std::size_t used = 0;
            const long v = std::stol(tok, &used);
            if (v < 0 || used != tok.size()) throw std::invalid_argument("");
            dims.n.push_back(static_cast<std::size_t>(v));
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::Parse, "bad dimension '" + tok + "'");
        }
    }
    if (dims.n.size() == 1 && q.vertex_count() > 1) dims.n.assign(q.vertex_count(), dims.n[0]);
    validate_dims(q, dims);
    return dims;
}

inline json to_json(const DimensionVector& dims, const DoubledQuiver& q) {
    json j = json::object();
    for (VertexId v = 0; v < q.vertex_count(); ++v) j[q.vertex_name(v)] = dims[v];
    return j;
}

/// {"dims": {"v": n, ...}, "mats": {"x": [["p/q", ...], ...], ...}}; missing arrows are zero.
inline RepPoint rep_point_from_json(const json& j, const QuiverPtr& q) {
    if (!j.contains("dims")) throw Error(ErrorKind::Validation, "rep point needs 'dims'");
    DimensionVector dims;
    const auto& jd = j.at("dims");
    for (VertexId v = 0; v < q->vertex_count(); ++v) {
        const auto& name = q->vertex_name(v);
        if (!jd.contains(name)) throw Error(ErrorKind::UnknownVertex, "dims has no entry for vertex '" + name + "'");
        dims.n.push_back(jd.at(name).get<std::size_t>());
    }
    for (const auto& [name, _] : jd.items()) q->base().vertex(name);
    RepPoint pt = zero_point(q, dims);
    if (j.contains("mats"))
        for (const auto& [name, m] : j.at("mats").items()) {
            const ArrowId a = q->arrow_id(name);
            pt.mats[a] = matrix_from_json(m, dims[q->head(a)], dims[q->tail(a)], "matrix for '" + name + "'");
        }
    return pt;
}

inline json to_json(const RepPoint& pt) {
    const auto& q = *pt.quiver;
    json mats = json::object();
    for (ArrowId a = 0; a < q.arrow_count(); ++a) mats[q.name(a)] = to_json(pt.mats[a]);
    return {{"dims", to_json(pt.dims, q)}, {"mats", mats}};
}

inline json to_json(const MomentValue& mu, const DoubledQuiver& q) {
    json j = json::object();
    for (VertexId v = 0; v < q.vertex_count(); ++v) j[q.vertex_name(v)] = to_json(mu[v]);
    return j;
}

/// {"X": [[...]], "Y": [[...]]}, or a one-loop rep point.
inline CMPoint cm_point_from_json(const json& j) {
    if (j.contains("X") && j.contains("Y")) {
        CMPoint pt{matrix_from_json(j.at("X"), "X"), matrix_from_json(j.at("Y"), "Y")};
        if (!pt.X.is_square() || pt.X.rows() != pt.Y.rows() || pt.X.cols() != pt.Y.cols())
            throw Error(ErrorKind::ShapeMismatch, "X and Y must be square of equal size");
        return pt;
    }
    auto rp = rep_point_from_json(j, cm_quiver());
    return {rp.mats[0], rp.mats[1]};
}

inline json to_json(const CMPoint& pt) { return {{"X", to_json(pt.X)}, {"Y", to_json(pt.Y)}}; }

// ---------------------------------------------------------------- symbolic values

inline json necklace_to_json(const Necklace& f) {
    const auto& q = *f.quiver();
    json terms = json::array();
    for (const auto& [p, c] : f.terms()) {
        json word = json::array();
        for (ArrowId a : p.arrows) word.push_back(q.name(a));
        json t = {{"coeff", to_json(c)}, {"cycle", word}};
        if (p.empty()) t["vertex"] = q.vertex_name(p.vertex);
        terms.push_back(t);
    }
    return {{"text", to_string(f)}, {"terms", terms}};
}

inline json value_to_json(const ParsedValue& v) {
    json j = {{"kind", value_kind(v)}, {"text", print_value(v)}};
    if (auto* n = std::get_if<Necklace>(&v)) j["terms"] = necklace_to_json(*n)["terms"];
    return j;
}

}  // namespace ncsg

#endif  // NCSG_JSON_IO_HPP
