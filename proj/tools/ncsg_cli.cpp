// Command-line front end: every command prints one JSON document (verify
// prints JSON lines) to stdout or to --out.

#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "ncsg/verify.hpp"

using namespace ncsg;

namespace {

struct Globals {
    std::string quiver_file;
    std::uint64_t seed = 42;
    std::optional<std::size_t> degree;
    std::optional<std::string> dims;
    std::optional<std::size_t> trials;
    std::string out;
    bool timings = false;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Validation, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::Parse, path + ": " + e.what());
    }
}

QuiverPtr load_quiver(const Globals& g) {
    if (g.quiver_file.empty()) return cm_quiver();
    return quiver_from_json(read_json_file(g.quiver_file));
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream in(text);
    for (std::string tok; std::getline(in, tok, ',');) out.push_back(parse_rational(tok));
    return out;
}

/// In cm commands "y" names the starred loop x*.
std::string cm_alias(const std::string& src) { return std::regex_replace(src, std::regex(R"(\by\b(?!\*))"), "x*"); }

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error(ErrorKind::Validation, "cannot write '" + path + "'");
        }
    }
    void line(const json& j) { (file_.is_open() ? file_ : std::cout) << j.dump() << '\n'; }

private:
    std::ofstream file_;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact noncommutative symplectic geometry on quiver path algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--quiver", g.quiver_file, "quiver JSON file (default: one vertex, one loop x)");
    app.add_option("--seed", g.seed, "64-bit seed for all randomness");
    app.add_option("--degree", g.degree, "degree bound, or the Darboux truncation N");
    app.add_option("--dims", g.dims, "dimension vector, e.g. 2 or 2,2");
    app.add_option("--trials", g.trials, "trial count override");
    app.add_option("--out", g.out, "write output here instead of stdout");
    app.add_flag("--timings", g.timings, "include wall-clock timings in verify reports");

    std::function<json()> action;
    int exit_code = 0;

    auto* quiver_cmd = app.add_subcommand("quiver", "quiver utilities");
    quiver_cmd->require_subcommand(1);
    quiver_cmd->add_subcommand("double", "print the doubled quiver")->callback([&] {
        action = [&] { return quiver_to_json(*load_quiver(g)); };
    });

    std::string expr_f, expr_g, arrow;
    auto* bracket_cmd = app.add_subcommand("bracket", "necklace bracket {f, g}");
    bracket_cmd->add_option("f", expr_f)->required();
    bracket_cmd->add_option("g", expr_g)->required();
    bracket_cmd->callback([&] {
        action = [&] {
            auto q = load_quiver(g);
            return value_to_json(necklace_bracket(parse_as<Necklace>(expr_f, q), parse_as<Necklace>(expr_g, q)));
        };
    });

    auto* cycder_cmd = app.add_subcommand("cycder", "cyclic derivatives of a necklace");
    cycder_cmd->add_option("f", expr_f)->required();
    cycder_cmd->add_option("--arrow", arrow, "only this arrow");
    cycder_cmd->callback([&] {
        action = [&] {
            auto q = load_quiver(g);
            auto f = parse_as<Necklace>(expr_f, q);
            json j = json::object();
            for (ArrowId a = 0; a < q->arrow_count(); ++a)
                if (arrow.empty() || q->name(a) == arrow) j[q->name(a)] = to_string(cyclic_derivative(f, a));
            if (!arrow.empty()) q->arrow_id(arrow);
            return j;
        };
    });

    auto* d_cmd = app.add_subcommand("d", "de Rham differential of a necklace or form");
    d_cmd->add_option("expr", expr_f)->required();
    d_cmd->callback([&] {
        action = [&] {
            auto q = load_quiver(g);
            auto v = parse_expression(expr_f, q);
            if (auto* p = std::get_if<PathAlgebraElement>(&v)) v = project_to_necklace(*p);
            if (auto* f = std::get_if<Necklace>(&v)) return value_to_json(d(*f));
            if (auto* f = std::get_if<OneForm>(&v)) return value_to_json(d(*f));
            if (auto* f = std::get_if<TwoForm>(&v)) return value_to_json(d(*f));
            if (std::holds_alternative<ThreeForm>(v)) return value_to_json(ThreeForm(q));
            throw Error(ErrorKind::Validation, std::string("d is not defined on a ") + value_kind(v));
        };
    });

    auto* ham_cmd = app.add_subcommand("ham", "Hamiltonian derivation of a necklace");
    ham_cmd->add_option("f", expr_f)->required();
    ham_cmd->callback([&] {
        action = [&] {
            auto q = load_quiver(g);
            return value_to_json(hamiltonian_derivation(parse_as<Necklace>(expr_f, q)));
        };
    });

    std::string form_src;
    bool certificate = false;
    auto* darboux_cmd = app.add_subcommand("darboux", "formal Darboux chart of a closed 2-form");
    darboux_cmd->add_option("--form", form_src, "2-form in the expression language")->required();
    darboux_cmd->add_flag("--emit-certificate", certificate, "also print the inverse and the verified residual");
    darboux_cmd->callback([&] {
        action = [&] {
            auto q = load_quiver(g);
            const std::size_t n = g.degree.value_or(5);
            auto res = darboux_normalize(parse_as<TwoForm>(form_src, q), n);
            auto images = [&](const FormalAutomorphism& phi) {
                json j = json::object();
                for (ArrowId a = 0; a < q->arrow_count(); ++a) j[q->name(a)] = to_string(phi(a));
                return j;
            };
            json j = {{"truncation", n}, {"phi", images(res.phi)}, {"omega0", to_string(res.omega0)}};
            if (certificate) {
                j["inverse"] = images(res.inverse);
                j["residual"] = to_string(res.residual);
            }
            return j;
        };
    });

    std::string point_file;
    auto* trace_cmd = app.add_subcommand("trace-eval", "tr f at a representation");
    trace_cmd->add_option("f", expr_f)->required();
    trace_cmd->add_option("--point", point_file, "rep point JSON")->required();
    trace_cmd->callback([&] {
        action = [&] {
            auto q = load_quiver(g);
            auto v = parse_expression(expr_f, q);
            auto pt = rep_point_from_json(read_json_file(point_file), q);
            Rational r;
            if (auto* p = std::get_if<PathAlgebraElement>(&v)) r = trace_evaluate(*p, pt);
            else if (auto* n = std::get_if<Necklace>(&v)) r = trace_evaluate(*n, pt);
            else throw Error(ErrorKind::Validation, std::string("cannot take the trace of a ") + value_kind(v));
            return json{{"trace", to_string(r)}};
        };
    });

    auto* moment_cmd = app.add_subcommand("moment", "moment map at a representation");
    moment_cmd->add_option("--point", point_file, "rep point JSON")->required();
    moment_cmd->callback([&] {
        action = [&] {
            auto q = load_quiver(g);
            auto pt = rep_point_from_json(read_json_file(point_file), q);
            return json{{"mu", to_json(moment_map(pt), *q)}};
        };
    });

    auto* cm_cmd = app.add_subcommand("cm", "Calogero-Moser space");
    cm_cmd->require_subcommand(1);
    std::string xs, ps;
    auto* cm_point_cmd = cm_cmd->add_subcommand("point", "the Calogero-Moser matrices of (x, p)");
    cm_point_cmd->add_option("--x", xs, "distinct positions, comma separated")->required();
    cm_point_cmd->add_option("--p", ps, "momenta, comma separated")->required();
    cm_point_cmd->callback([&] {
        action = [&] { return to_json(cm_point(parse_rational_list(xs), parse_rational_list(ps))); };
    });
    auto* cm_check_cmd = cm_cmd->add_subcommand("check", "rank-one test for a matrix pair");
    cm_check_cmd->add_option("--matrices", point_file, "JSON with X and Y")->required();
    cm_check_cmd->callback([&] {
        action = [&] {
            auto pt = cm_point_from_json(read_json_file(point_file));
            auto m = cm_shifted_commutator(pt.X, pt.Y);
            const bool member = cm_membership(pt.X, pt.Y);
            if (!member) exit_code = 1;
            return json{{"member", member}, {"rank", rank(m)}, {"trace", to_string(trace(m))}, {"n", pt.n()}};
        };
    });
    auto* cm_eval_cmd = cm_cmd->add_subcommand("eval", "tr f(X, Y) at a matrix pair");
    cm_eval_cmd->add_option("--necklace", expr_f, "necklace in x and y (y = x*)")->required();
    cm_eval_cmd->add_option("--point", point_file, "JSON with X and Y")->required();
    cm_eval_cmd->callback([&] {
        action = [&] {
            auto f = parse_as<Necklace>(cm_alias(expr_f), cm_quiver());
            auto pt = cm_point_from_json(read_json_file(point_file));
            return json{{"necklace", to_string(f)}, {"value", to_string(coadjoint_eval(f, pt))}};
        };
    });

    std::vector<std::string> checks;
    bool flip_oracle = false;
    auto* verify_cmd = app.add_subcommand("verify", "run property checks, one JSON line per check");
    verify_cmd->add_option("checks", checks, "check names, or 'all'")->required();
    verify_cmd->add_flag("--flip-oracle-sign", flip_oracle, "negative control: negate the Poisson oracle");
    verify_cmd->add_option("--truncation", "Darboux truncation N (default 5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        Output out(g.out);
        if (verify_cmd->parsed()) {
            VerifyConfig cfg;
            cfg.seed = g.seed;
            cfg.trials = g.trials;
            cfg.max_degree = g.degree;
            cfg.dims = g.dims;
            if (!g.quiver_file.empty()) cfg.quiver = load_quiver(g);
            if (auto* opt = verify_cmd->get_option("--truncation"); opt->count() > 0)
                cfg.truncation = opt->as<std::size_t>();
            cfg.oracle_sign = flip_oracle ? -1 : 1;
            cfg.timings = g.timings;
            if (checks.size() == 1 && checks[0] == "all") checks = check_names();
            for (const auto& r : run_verification_suite(checks, cfg)) {
                out.line(to_json(r, cfg.timings));
                if (!r.pass) exit_code = 1;
            }
            return exit_code;
        }
        out.line(action());
        return exit_code;
    } catch (const Error& e) {
        std::cerr << json{{"error", kind_name(e.kind())}, {"message", e.what()}}.dump() << '\n';
        return 2;
    }
}
