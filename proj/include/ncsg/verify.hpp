#ifndef NCSG_VERIFY_HPP
#define NCSG_VERIFY_HPP

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "ncsg/bracket_oracle.hpp"
#include "ncsg/calogero.hpp"
#include "ncsg/darboux.hpp"
#include "ncsg/json_io.hpp"

namespace ncsg {

struct VerifyConfig {
    std::uint64_t seed = 42;
    std::optional<std::size_t> trials;      ///< overrides each check's default
    std::optional<std::size_t> max_degree;  ///< overrides each check's default
    QuiverPtr quiver;                       ///< restrict to this quiver when set
    std::optional<std::string> dims;        ///< "n" or "n1,n2,..." for rep-level checks
    std::size_t truncation = 5;             ///< Darboux N
    int oracle_sign = 1;                    ///< -1 flips the Poisson oracle (negative control)
    bool timings = false;
};

struct CheckReport {
    std::string check;
    bool pass = true;
    std::size_t trials = 0;
    std::size_t failures = 0;
    json details = json::object();
    json counterexample;  ///< first failure, null when passing
    double elapsed_ms = 0;

    void fail(json witness) {
        ++failures;
        pass = false;
        if (counterexample.is_null()) counterexample = std::move(witness);
    }
};

inline json to_json(const CheckReport& r, bool timings) {
    json j = {{"check", r.check},         {"pass", r.pass},       {"trials", r.trials},
              {"failures", r.failures},   {"details", r.details}, {"counterexample", r.counterexample}};
    if (timings) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

namespace detail {

inline QuiverPtr verify_one_loop() { return double_quiver(Quiver({"0"}, {{"x", "0", "0"}})); }
inline QuiverPtr verify_two_loop() {
    return double_quiver(Quiver({"0"}, {{"x", "0", "0"}, {"y", "0", "0"}}));
}
inline QuiverPtr verify_two_vertex() {
    return double_quiver(Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "1"}}));
}

inline std::string quiver_label(const DoubledQuiver& q) {
    std::string s = "vertices:";
    for (const auto& v : q.base().vertices()) s += " " + v;
    s += "; arrows:";
    for (const auto& a : q.base().arrows()) s += " " + a.name;
    return s;
}

inline std::vector<QuiverPtr> lie_quivers(const VerifyConfig& cfg) {
    if (cfg.quiver) return {cfg.quiver};
    return {verify_one_loop(), verify_two_vertex()};
}

inline std::size_t trials_or(const VerifyConfig& cfg, std::size_t fallback) { return cfg.trials.value_or(fallback); }
inline std::size_t degree_or(const VerifyConfig& cfg, std::size_t fallback) {
    return cfg.max_degree.value_or(fallback);
}

// ---------------------------------------------------------------- bracket checks

inline void check_antisymmetry(const VerifyConfig& cfg, CheckReport& r) {
    const std::size_t deg = degree_or(cfg, 6), trials = trials_or(cfg, 200);
    for (const auto& q : lie_quivers(cfg)) {
        PathCatalog cat(q, deg);
        for (std::size_t t = 0; t < trials; ++t, ++r.trials) {
            Rng rng(derive_seed(cfg.seed, "antisymmetry/" + quiver_label(*q), t));
            auto f = random_necklace(cat, rng, {0, deg, 3, 3});
            auto g = random_necklace(cat, rng, {0, deg, 3, 3});
            auto sum = necklace_bracket(f, g) + necklace_bracket(g, f);
            if (!sum.is_zero())
                r.fail({{"quiver", quiver_label(*q)}, {"f", to_string(f)}, {"g", to_string(g)},
                        {"residual", to_string(sum)}});
        }
    }
}

inline void check_jacobi(const VerifyConfig& cfg, CheckReport& r) {
    const std::size_t deg = degree_or(cfg, 6), trials = trials_or(cfg, 200);
    for (const auto& q : lie_quivers(cfg)) {
        PathCatalog cat(q, deg);
        for (std::size_t t = 0; t < trials; ++t, ++r.trials) {
            Rng rng(derive_seed(cfg.seed, "jacobi/" + quiver_label(*q), t));
            auto f = random_necklace(cat, rng, {0, deg, 3, 3});
            auto g = random_necklace(cat, rng, {0, deg, 3, 3});
            auto h = random_necklace(cat, rng, {0, deg, 3, 3});
            auto jac = necklace_bracket(f, necklace_bracket(g, h)) + necklace_bracket(g, necklace_bracket(h, f)) +
                       necklace_bracket(h, necklace_bracket(f, g));
            if (!jac.is_zero())
                r.fail({{"quiver", quiver_label(*q)}, {"f", to_string(f)}, {"g", to_string(g)},
                        {"h", to_string(h)}, {"residual", to_string(jac)}});
        }
    }
}

inline void check_bracket_oracle(const VerifyConfig& cfg, CheckReport& r) {
    const std::size_t deg = degree_or(cfg, 6), trials = trials_or(cfg, 200);
    for (const auto& q : lie_quivers(cfg)) {
        PathCatalog cat(q, deg);
        for (std::size_t t = 0; t < trials; ++t, ++r.trials) {
            Rng rng(derive_seed(cfg.seed, "bracket-oracle/" + quiver_label(*q), t));
            auto f = random_necklace(cat, rng, {0, deg, 3, 3});
            auto g = random_necklace(cat, rng, {0, deg, 3, 3});
            auto fast = necklace_bracket(f, g), slow = bracket_tensor_oracle(f, g);
            if (fast != slow)
                r.fail({{"quiver", quiver_label(*q)}, {"f", to_string(f)}, {"g", to_string(g)},
                        {"bracket", to_string(fast)}, {"oracle", to_string(slow)}});
        }
    }
}

// ---------------------------------------------------------------- de Rham checks

inline void check_cartan(const VerifyConfig& cfg, CheckReport& r) {
    const std::size_t deg = degree_or(cfg, 5), trials = trials_or(cfg, 100);
    const auto quivers = lie_quivers(cfg);
    std::vector<PathCatalog> cats;
    for (const auto& q : quivers) cats.emplace_back(q, deg);
    for (std::size_t t = 0; t < trials; ++t, ++r.trials) {
        const auto& cat = cats[t % cats.size()];
        const auto& q = *cat.quiver();
        Rng rng(derive_seed(cfg.seed, "cartan", t));
        const RandomShape dshape{0, deg, 2, 3};
        auto th = random_derivation(cat, rng, dshape), ga = random_derivation(cat, rng, dshape);
        auto f = random_necklace(cat, rng, {0, deg, 2, 3});
        auto a = random_form<1>(cat, rng, {0, deg, 2, 3});
        auto b = random_form<2>(cat, rng, {0, deg, 2, 3});
        auto br = commutator(th, ga);
        std::vector<std::string> broken;
        auto expect = [&](bool ok, const char* name) {
            if (!ok) broken.push_back(name);
        };
        expect(lie_derivative(th, f) == contract(th, d(f)), "L=di+id on DR0");
        expect(lie_derivative(th, a) == d(contract(th, a)) + contract(th, d(a)), "L=di+id on DR1");
        expect(lie_derivative(th, b) == d(contract(th, b)) + contract(th, d(b)), "L=di+id on DR2");
        expect(lie_derivative(th, d(f)) == d(lie_derivative(th, f)), "[L,d]=0 on DR0");
        expect(lie_derivative(th, d(a)) == d(lie_derivative(th, a)), "[L,d]=0 on DR1");
        expect(lie_derivative(th, contract(ga, a)) - contract(ga, lie_derivative(th, a)) == contract(br, a),
               "[L,i]=i[,] on DR1");
        expect(lie_derivative(th, contract(ga, b)) - contract(ga, lie_derivative(th, b)) == contract(br, b),
               "[L,i]=i[,] on DR2");
        expect(lie_derivative(th, lie_derivative(ga, f)) - lie_derivative(ga, lie_derivative(th, f)) ==
                   lie_derivative(br, f),
               "[L,L]=L[,] on DR0");
        expect(lie_derivative(th, lie_derivative(ga, a)) - lie_derivative(ga, lie_derivative(th, a)) ==
                   lie_derivative(br, a),
               "[L,L]=L[,] on DR1");
        expect(lie_derivative(th, lie_derivative(ga, b)) - lie_derivative(ga, lie_derivative(th, b)) ==
                   lie_derivative(br, b),
               "[L,L]=L[,] on DR2");
        if (!broken.empty())
            r.fail({{"quiver", quiver_label(q)}, {"relations", broken}, {"theta", to_string(th)},
                    {"gamma", to_string(ga)}, {"f", to_string(f)}, {"alpha", to_string(a)}, {"beta", to_string(b)}});
    }
}

inline void check_poincare(const VerifyConfig& cfg, CheckReport& r) {
    const std::size_t deg = degree_or(cfg, 5), trials = trials_or(cfg, 100);
    const auto quivers = lie_quivers(cfg);
    std::vector<PathCatalog> cats;
    for (const auto& q : quivers) cats.emplace_back(q, deg);
    for (std::size_t t = 0; t < trials; ++t, ++r.trials) {
        const auto& cat = cats[t % cats.size()];
        const auto& q = *cat.quiver();
        Rng rng(derive_seed(cfg.seed, "poincare", t));
        // positive-weight closed forms: exact forms d(necklace) and d(1-form)
        auto f = random_necklace(cat, rng, {1, deg, 3, 3});
        auto alpha = d(f);
        auto beta = random_form<1>(cat, rng, {0, deg, 3, 3});
        auto omega = d(beta);
        std::vector<std::string> broken;
        if (d(euler_homotopy(alpha)) != alpha) broken.push_back("d h = id on DR1");
        if (d(euler_homotopy(omega)) != omega) broken.push_back("d h = id on DR2");
        if (euler_homotopy(d(f)) != f) broken.push_back("h d = id on positive-degree necklaces");
        if (!broken.empty())
            r.fail({{"quiver", quiver_label(q)}, {"relations", broken}, {"f", to_string(f)},
                    {"beta", to_string(beta)}});
    }
}

/// Coordinates of f ↦ θ_f on the cycles of one length; returns the kernel dimension.
inline std::size_t hamiltonian_kernel_dimension(const PathCatalog& cat, std::size_t len) {
    const auto& q = cat.quiver();
    const auto& basis = cat.cycles(len);
    std::map<std::pair<ArrowId, Path>, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> columns;
    for (const auto& c : basis) {
        auto theta = hamiltonian_derivation(Necklace::cycle(q, c));
        std::vector<std::pair<std::size_t, Rational>> col;
        for (ArrowId a = 0; a < q->arrow_count(); ++a)
            for (const auto& [p, v] : theta(a).terms()) {
                auto [it, _] = row_of.try_emplace({a, p}, row_of.size());
                col.emplace_back(it->second, v);
            }
        columns.push_back(std::move(col));
    }
    Matrix m(row_of.size(), basis.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [i, v] : columns[j]) m(i, j) += v;
    return basis.size() - rank(std::move(m));
}

inline void check_central_extension(const VerifyConfig& cfg, CheckReport& r) {
    const std::size_t deg = degree_or(cfg, 6), trials = trials_or(cfg, 100);
    json kernels = json::object();
    for (const auto& q : lie_quivers(cfg)) {
        PathCatalog cat(q, deg);
        json dims = json::array();
        for (std::size_t len = 0; len <= deg; ++len) {
            const std::size_t k = hamiltonian_kernel_dimension(cat, len);
            dims.push_back(k);
            const std::size_t expected = len == 0 ? q->vertex_count() : 0;
            ++r.trials;
            if (k != expected)
                r.fail({{"quiver", quiver_label(*q)}, {"degree", len}, {"kernel_dimension", k},
                        {"expected", expected}});
        }
        kernels[quiver_label(*q)] = dims;
        for (std::size_t t = 0; t < trials; ++t, ++r.trials) {
            Rng rng(derive_seed(cfg.seed, "central-extension/" + quiver_label(*q), t));
            auto f = random_necklace(cat, rng, {0, deg, 3, 3});
            auto g = random_necklace(cat, rng, {0, deg, 3, 3});
            auto lhs = hamiltonian_derivation(necklace_bracket(f, g));
            auto rhs = commutator(hamiltonian_derivation(f), hamiltonian_derivation(g));
            if (lhs != rhs)
                r.fail({{"quiver", quiver_label(*q)}, {"f", to_string(f)}, {"g", to_string(g)},
                        {"theta_bracket", to_string(lhs)}, {"commutator", to_string(rhs)}});
        }
    }
    r.details["kernel_dimensions_by_degree"] = kernels;
}

// ---------------------------------------------------------------- representation checks

struct RepCase {
    QuiverPtr quiver;
    DimensionVector dims;
};

inline std::vector<RepCase> hom_cases(const VerifyConfig& cfg) {
    if (cfg.quiver || cfg.dims) {
        QuiverPtr q = cfg.quiver ? cfg.quiver : verify_one_loop();
        return {{q, parse_dims(cfg.dims.value_or("2"), *q)}};
    }
    auto one = verify_one_loop();
    return {{one, {{1}}}, {one, {{2}}}, {one, {{3}}}, {verify_two_vertex(), {{2, 2}}}};
}

inline std::string dims_label(const DimensionVector& dims) {
    std::string s;
    for (std::size_t k = 0; k < dims.n.size(); ++k) s += (k ? "," : "") + std::to_string(dims.n[k]);
    return s;
}

inline void check_hom(const VerifyConfig& cfg, CheckReport& r) {
    const std::size_t deg = degree_or(cfg, 5), trials = trials_or(cfg, 100);
    for (const auto& [q, dims] : hom_cases(cfg)) {
        PathCatalog cat(q, deg);
        VariableLayout layout(q, dims);
        const std::string label = quiver_label(*q) + "; dims " + dims_label(dims);
        for (std::size_t t = 0; t < trials; ++t, ++r.trials) {
            Rng rng(derive_seed(cfg.seed, "hom/" + label, t));
            auto f = random_necklace(cat, rng, {0, deg, 2, 3});
            auto g = random_necklace(cat, rng, {0, deg, 2, 3});
            auto res = verify_homomorphism(f, g, layout, cfg.oracle_sign);
            if (!res.equal)
                r.fail({{"quiver", quiver_label(*q)}, {"dims", to_json(dims, *q)}, {"f", to_string(f)},
                        {"g", to_string(g)}, {"residual", to_string(res.residual, layout)}});
        }
    }
    if (cfg.oracle_sign != 1) r.details["oracle_sign"] = cfg.oracle_sign;
}

inline Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t box) {
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-box, box);
    return m;
}

inline void check_moment_hamiltonian(const VerifyConfig& cfg, CheckReport& r) {
    const std::size_t trials = trials_or(cfg, 20);
    auto one = verify_one_loop(), two = verify_two_vertex();
    for (std::size_t t = 0; t < trials; ++t, ++r.trials) {
        Rng rng(derive_seed(cfg.seed, "moment-hamiltonian", t));
        QuiverPtr q;
        DimensionVector dims;
        if (cfg.quiver || cfg.dims) {
            auto c = hom_cases(cfg).front();
            q = c.quiver;
            dims = c.dims;
        } else if (t % 2 == 0) {
            q = one;
            dims.n = {static_cast<std::size_t>(rng.uniform(1, 3))};
        } else {
            q = two;
            dims.n = {static_cast<std::size_t>(rng.uniform(1, 2)), static_cast<std::size_t>(rng.uniform(1, 2))};
        }
        std::vector<Matrix> xi;
        for (VertexId v = 0; v < q->vertex_count(); ++v) xi.push_back(random_matrix(rng, dims[v], dims[v], 3));
        VariableLayout layout(q, dims);
        auto res = ncsg::check_moment_hamiltonian(layout, xi);
        json witness = {{"quiver", quiver_label(*q)}, {"dims", to_json(dims, *q)}};
        if (!res.pass) {
            json xs = json::object();
            for (VertexId v = 0; v < q->vertex_count(); ++v) xs[q->vertex_name(v)] = to_json(xi[v]);
            witness["xi"] = xs;
            witness["detail"] = res.detail;
            r.fail(witness);
            continue;
        }
        // single loop: μ(x, y) = [x, y]
        if (q->vertex_count() == 1 && q->arrow_count() == 2) {
            auto pt = random_point(q, dims, rng);
            if (moment_map(pt)[0] != commutator(pt.mats[0], pt.mats[1])) {
                witness["point"] = to_json(pt);
                witness["detail"] = "moment map differs from [x, y]";
                r.fail(witness);
            }
        }
    }
}

// ---------------------------------------------------------------- Darboux

inline TwoForm constant_two_form(const QuiverPtr& q, const Matrix& skew) {
    TwoForm w(q);
    for (ArrowId a = 0; a < q->arrow_count(); ++a)
        for (ArrowId b = a + 1; b < q->arrow_count(); ++b)
            if (sgn(skew(a, b)) != 0) w.add_word({{a, true}, {b, true}}, skew(a, b));
    return w;
}

inline Matrix random_skew(Rng& rng, std::size_t n, std::int64_t box) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            m(i, j) = rng.uniform(-box, box);
            m(j, i) = -m(i, j);
        }
    return m;
}

inline void check_darboux(const VerifyConfig& cfg, CheckReport& r) {
    const std::size_t deg = degree_or(cfg, 3), trials = trials_or(cfg, 20), n = cfg.truncation;
    std::vector<QuiverPtr> quivers;
    if (cfg.quiver) quivers = {cfg.quiver};
    else quivers = {verify_one_loop(), verify_two_loop()};
    std::vector<PathCatalog> cats;
    for (const auto& q : quivers) cats.emplace_back(q, deg);
    for (std::size_t t = 0; t < trials; ++t, ++r.trials) {
        const auto& cat = cats[t % cats.size()];
        const auto& q = cat.quiver();
        Rng rng(derive_seed(cfg.seed, "darboux", t));
        // ω = ω₀ + dβ with a nondegenerate constant part
        TwoForm omega(q);
        for (int attempt = 0;; ++attempt) {
            auto w0 = constant_two_form(q, random_skew(rng, q->arrow_count(), 3));
            auto beta = random_form<1>(cat, rng, {1, deg, 3, 3});
            omega = w0 + d(beta);
            if (inverse(constant_part_matrix(omega)) || attempt > 100) break;
        }
        json witness = {{"quiver", quiver_label(*q)}, {"omega", to_string(omega)}, {"truncation", n}};
        try {
            auto res = darboux_normalize(omega, n);
            const TwoForm w0 = omega.homogeneous_part(0);
            if (pullback(res.phi, omega, n) != w0 || res.omega0 != w0) {
                witness["phi"] = to_string(res.phi);
                r.fail(witness);
            } else if (!compose(res.phi, res.inverse).is_identity() || !compose(res.inverse, res.phi).is_identity()) {
                witness["detail"] = "inverse is not two-sided";
                r.fail(witness);
            }
        } catch (const Error& e) {
            witness["error"] = std::string(kind_name(e.kind())) + ": " + e.what();
            r.fail(witness);
        }
    }
    // degenerate constant parts must be rejected
    json rejected = json::array();
    for (const auto& q : quivers) {
        PathCatalog cat(q, deg);
        Rng rng(derive_seed(cfg.seed, "darboux/degenerate/" + quiver_label(*q), 0));
        Matrix skew(q->arrow_count(), q->arrow_count());
        if (q->arrow_count() >= 4) {
            skew(0, 2) = 1;  // rank 2 of 4
            skew(2, 0) = -1;
        }
        auto omega = constant_two_form(q, skew) + d(random_form<1>(cat, rng, {2, deg, 3, 3}));
        ++r.trials;
        try {
            darboux_normalize(omega, n);
            r.fail({{"quiver", quiver_label(*q)}, {"omega", to_string(omega)},
                    {"detail", "degenerate constant part was accepted"}});
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Degenerate)
                r.fail({{"quiver", quiver_label(*q)}, {"omega", to_string(omega)},
                        {"detail", std::string("wrong error kind ") + kind_name(e.kind())}});
            else
                rejected.push_back(to_string(omega));
        }
    }
    r.details["degenerate_rejected"] = rejected;
}

// ---------------------------------------------------------------- Calogero-Moser

inline void check_cm(const VerifyConfig& cfg, CheckReport& r) {
    const std::size_t trials = trials_or(cfg, 50);
    for (std::size_t t = 0; t < trials; ++t, ++r.trials) {
        Rng rng(derive_seed(cfg.seed, "cm", t));
        const std::size_t n = 1 + t % 5;
        std::vector<Rational> x, p;
        while (x.size() < n) {
            const Rational c = Rational(rng.uniform(-20, 20)) / rng.uniform(1, 4);
            if (std::find(x.begin(), x.end(), c) == x.end()) x.push_back(c);
        }
        for (std::size_t i = 0; i < n; ++i) p.emplace_back(rng.uniform(-9, 9));
        auto pt = cm_point(x, p);
        auto m = cm_shifted_commutator(pt.X, pt.Y);
        if (!cm_membership(pt.X, pt.Y) || rank(m) != 1 || trace(m) != static_cast<long>(n))
            r.fail({{"point", to_json(pt)}, {"rank", rank(m)}, {"trace", to_string(trace(m))}});
    }
}

inline void check_cm_flow(const VerifyConfig& cfg, CheckReport& r) {
    const std::size_t deg = degree_or(cfg, 4), trials = trials_or(cfg, 20);
    auto q = cm_quiver();
    PathCatalog cat(q, deg);
    for (std::size_t t = 0; t < trials; ++t, ++r.trials) {
        Rng rng(derive_seed(cfg.seed, "cm-flow", t));
        const std::size_t n = 1 + t % 3;
        CMPoint pt{random_matrix(rng, n, n, 3), random_matrix(rng, n, n, 3)};
        auto f = random_necklace(cat, rng, {0, deg, 2, 3});
        auto fx = cm_flow_x2(f, pt), fy = cm_flow_y2(f, pt);
        if (!fx.equal() || !fy.equal())
            r.fail({{"f", to_string(f)}, {"point", to_json(pt)},
                    {"x2", {{"bracket", to_string(fx.bracket)}, {"derivative", to_string(fx.derivative)}}},
                    {"y2", {{"bracket", to_string(fy.bracket)}, {"derivative", to_string(fy.derivative)}}}});
    }
}

// ---------------------------------------------------------------- trace-kernel probe

inline void check_trace_kernel(const VerifyConfig& cfg, CheckReport& r) {
    const std::size_t deg = degree_or(cfg, 6), trials = trials_or(cfg, 50);
    QuiverPtr q = cfg.quiver ? cfg.quiver : verify_one_loop();
    PathCatalog cat(q, deg);
    std::size_t witnesses = 0, inconclusive = 0, kernels = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        Rng rng(derive_seed(cfg.seed, "trace-kernel", t));
        // commutators must vanish everywhere
        const std::size_t half = std::max<std::size_t>(1, deg / 2);
        auto u = random_element(cat, rng, {0, half, 2, 3}), v = random_element(cat, rng, {0, half, 2, 3});
        auto comm = u * v - v * u;
        ProbeConfig pc{3, 10, derive_seed(cfg.seed, "trace-kernel/commutator", t), 3};
        auto kr = trace_vanishing_probe(comm, pc);
        ++r.trials;
        if (kr.verdict == ProbeVerdict::Kernel) ++kernels;
        else
            r.fail({{"element", to_string(comm)}, {"verdict", verdict_name(kr.verdict)},
                    {"point", kr.point ? to_json(*kr.point) : json()}, {"value", to_string(kr.value)}});
        // nonzero necklaces need a witness at n ≤ max(1, degree)
        Necklace f(q);
        while (f.is_zero()) f = random_necklace(cat, rng, {0, deg, 3, 3});
        int fdeg = 0;
        for (const auto& [p, c] : f.terms()) fdeg = std::max(fdeg, static_cast<int>(p.length()));
        ProbeConfig nc{std::max<std::size_t>(1, static_cast<std::size_t>(fdeg)), 20,
                       derive_seed(cfg.seed, "trace-kernel/necklace", t), 3};
        auto wr = trace_vanishing_probe(f, nc);
        ++r.trials;
        if (wr.verdict == ProbeVerdict::Witness) ++witnesses;
        else if (wr.verdict == ProbeVerdict::Inconclusive) ++inconclusive;
        else r.fail({{"necklace", to_string(f)}, {"verdict", verdict_name(wr.verdict)}});
    }
    r.details["kernel"] = kernels;
    r.details["witness"] = witnesses;
    r.details["inconclusive"] = inconclusive;
    // at most 1% of the necklace probes may be inconclusive
    if (inconclusive * 100 > trials) r.fail({{"detail", "too many inconclusive probes"}, {"inconclusive", inconclusive}});
}

struct CheckEntry {
    const char* name;
    void (*run)(const VerifyConfig&, CheckReport&);
};

inline const std::vector<CheckEntry>& check_table() {
    static const std::vector<CheckEntry> table = {
        {"antisymmetry", check_antisymmetry},
        {"jacobi", check_jacobi},
        {"bracket-oracle", check_bracket_oracle},
        {"cartan", check_cartan},
        {"poincare", check_poincare},
        {"central-extension", check_central_extension},
        {"hom", check_hom},
        {"moment-hamiltonian", detail::check_moment_hamiltonian},
        {"darboux", check_darboux},
        {"cm", check_cm},
        {"cm-flow", check_cm_flow},
        {"trace-kernel", check_trace_kernel},
    };
    return table;
}

}  // namespace detail

/// Check names in report order.
inline std::vector<std::string> check_names() {
    std::vector<std::string> out;
    for (const auto& e : detail::check_table()) out.push_back(e.name);
    return out;
}

/// Runs one check; exceptions become failed report entries.
inline CheckReport run_check(const std::string& name, const VerifyConfig& cfg) {
    const auto& table = detail::check_table();
    auto it = std::find_if(table.begin(), table.end(), [&](const auto& e) { return name == e.name; });
    if (it == table.end()) throw Error(ErrorKind::Validation, "unknown check '" + name + "'");
    CheckReport r;
    r.check = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        it->run(cfg, r);
    } catch (const std::exception& e) {
        r.fail({{"error", e.what()}});
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

/// Runs the named checks concurrently; the result follows the canonical order.
inline std::vector<CheckReport> run_verification_suite(std::vector<std::string> names, const VerifyConfig& cfg) {
    const auto canon = check_names();
    for (const auto& n : names)
        if (std::find(canon.begin(), canon.end(), n) == canon.end())
            throw Error(ErrorKind::Validation, "unknown check '" + n + "'");
    std::sort(names.begin(), names.end(), [&](const auto& a, const auto& b) {
        return std::find(canon.begin(), canon.end(), a) < std::find(canon.begin(), canon.end(), b);
    });
    names.erase(std::unique(names.begin(), names.end()), names.end());
    std::vector<std::future<CheckReport>> jobs;
    for (const auto& n : names) jobs.push_back(std::async(std::launch::async, run_check, n, std::cref(cfg)));
    std::vector<CheckReport> out;
    for (auto& j : jobs) out.push_back(j.get());
    return out;
}

}  // namespace ncsg

#endif  // NCSG_VERIFY_HPP
