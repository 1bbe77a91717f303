#ifndef NCSG_DSL_HPP
#define NCSG_DSL_HPP

// Text syntax for elements, necklaces, forms and derivations.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor (['.'] factor)*            juxtaposition multiplies
//   factor := atom ['^' INT]
//   atom   := NUMBER ['/' NUMBER] | ARROW | 'e' '(' VERTEX ')'
//           | 'cyc' '(' expr ')' | 'd' '(' expr ')'
//           | 'i' '(' expr ',' expr ')' | 'L' '(' expr ',' expr ')'
//           | 'theta' '{' [ARROW '->' expr (',' ARROW '->' expr)*] '}'
//           | '(' expr ')'
//
// ARROW is an identifier with an optional '*' suffix. e, cyc, d, i, L and
// theta are keywords only when followed by their opening bracket.

#include <algorithm>
#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "ncsg/forms.hpp"

namespace ncsg {

using ParsedValue = std::variant<PathAlgebraElement, Necklace, OneForm, TwoForm, ThreeForm, Derivation>;

namespace detail {

/// A product of letters (some differentiated) in Ω_B A, before projection.
struct OmegaPath {
    VertexId vertex = 0;  ///< head; the idempotent's vertex when empty
    Word letters;

    auto operator<=>(const OmegaPath&) const = default;
};

using OmegaElement = LinearCombination<OmegaPath>;

inline VertexId omega_tail(const DoubledQuiver& q, const OmegaPath& p) {
    return p.letters.empty() ? p.vertex : q.tail(p.letters.back().arrow);
}

inline std::size_t d_count(const OmegaPath& p) {
    std::size_t k = 0;
    for (const auto& l : p.letters) k += l.d ? 1 : 0;
    return k;
}

inline OmegaElement omega_multiply(const DoubledQuiver& q, const OmegaElement& f, const OmegaElement& g) {
    OmegaElement out;
    for (const auto& [p, c] : f)
        for (const auto& [r, e] : g) {
            if (omega_tail(q, p) != r.vertex) continue;
            OmegaPath pr{p.vertex, p.letters};
            pr.letters.insert(pr.letters.end(), r.letters.begin(), r.letters.end());
            if (p.letters.empty()) pr.vertex = r.vertex;
            out.add(std::move(pr), c * e);
        }
    return out;
}

/// The super-derivation d on representatives.
inline OmegaElement omega_d(const OmegaElement& f) {
    OmegaElement out;
    for (const auto& [p, c] : f) {
        int sign = 1;
        for (std::size_t i = 0; i < p.letters.size(); ++i) {
            if (p.letters[i].d) {
                sign = -sign;
                continue;
            }
            OmegaPath v = p;
            v.letters[i].d = true;
            out.add(std::move(v), c * sign);
        }
    }
    return out;
}

inline OmegaElement omega_from(const PathAlgebraElement& f) {
    OmegaElement out;
    for (const auto& [p, c] : f.terms()) {
        OmegaPath w{p.vertex, {}};
        for (ArrowId a : p.arrows) w.letters.push_back({a, false});
        out.add(std::move(w), c);
    }
    return out;
}

inline OmegaElement omega_from(const Necklace& f) {
    OmegaElement out;
    for (const auto& [p, c] : f.terms()) {
        OmegaPath w{p.vertex, {}};
        for (ArrowId a : p.arrows) w.letters.push_back({a, false});
        out.add(std::move(w), c);
    }
    return out;
}

template <std::size_t K>
OmegaElement omega_from(const Form<K>& f) {
    const auto& q = *f.quiver();
    OmegaElement out;
    for (const auto& [k, c] : f.terms()) {
        Word w = k.word();
        out.add(OmegaPath{q.head(w.front().arrow), std::move(w)}, c);
    }
    return out;
}

/// Parser state: a cursor over the source with line/column tracking.
class Parser {
public:
    Parser(std::string_view src, QuiverPtr q) : src_(src), quiver_(std::move(q)) {}

    ParsedValue parse_top() {
        Value v = expr();
        skip_ws();
        if (pos_ < src_.size()) fail_syntax("unexpected '" + std::string(1, src_[pos_]) + "'");
        return finish(v, start_of_input_);
    }

private:
    // A value while parsing: a scalar, a representative in Ω (optionally
    // already projected by cyc), or a derivation.
    struct Value {
        enum class Kind { Scalar, Element, Cyclic, Derivation } kind = Kind::Scalar;
        Rational scalar = 0;
        OmegaElement omega;
        std::optional<Derivation> theta;
    };
    struct Pos {
        std::size_t line = 1, col = 1;
    };

    [[noreturn]] void fail(ErrorKind kind, const Pos& at, const std::string& msg) const {
        throw Error(kind, "line " + std::to_string(at.line) + ", column " + std::to_string(at.col) + ": " + msg);
    }
    [[noreturn]] void fail_syntax(const std::string& msg) const { fail(ErrorKind::Parse, here(), msg); }

    Pos here() const {
        Pos p;
        for (std::size_t i = 0; i < pos_ && i < src_.size(); ++i) {
            if (src_[i] == '\n') {
                ++p.line;
                p.col = 1;
            } else {
                ++p.col;
            }
        }
        return p;
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip_ws();
        return pos_ < src_.size() && src_[pos_] == c;
    }
    void expect(char c) {
        if (!peek(c)) fail_syntax(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool at_ident_start() {
        skip_ws();
        return pos_ < src_.size() && (std::isalpha(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_');
    }
    bool at_factor_start() {
        skip_ws();
        if (pos_ >= src_.size()) return false;
        const char c = src_[pos_];
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || at_ident_start();
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
        return std::string(src_.substr(start, pos_ - start));
    }
    /// Is the next non-space character after the current identifier `c`?
    bool followed_by(std::size_t after, char c) const {
        while (after < src_.size() && std::isspace(static_cast<unsigned char>(src_[after]))) ++after;
        return after < src_.size() && src_[after] == c;
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail_syntax("expected a number");
        return std::string(src_.substr(start, pos_ - start));
    }

    Value scalar(const Rational& c) {
        Value v;
        v.scalar = c;
        return v;
    }
    Value element(OmegaElement e, bool cyclic = false) {
        Value v;
        v.kind = cyclic ? Value::Kind::Cyclic : Value::Kind::Element;
        v.omega = std::move(e);
        return v;
    }
    OmegaElement as_omega(const Value& v) const {
        if (v.kind == Value::Kind::Scalar)
            return omega_from(Rational(v.scalar) * PathAlgebraElement::unit(quiver_));
        return v.omega;
    }

    Value expr() {
        bool negate = false;
        if (peek('-')) {
            ++pos_;
            negate = true;
        }
        Value acc = term();
        if (negate) acc = scale(acc, -1);
        while (true) {
            int sign;
            if (peek('+')) sign = 1;
            else if (peek('-')) sign = -1;
            else break;
            ++pos_;
            const Pos at = here();
            Value rhs = term();
            acc = add(acc, scale(rhs, sign), at);
        }
        return acc;
    }

    Value scale(Value v, const Rational& s) {
        switch (v.kind) {
            case Value::Kind::Scalar: v.scalar *= s; break;
            case Value::Kind::Derivation: *v.theta *= s; break;
            default: v.omega *= s; break;
        }
        return v;
    }

    Value add(const Value& a, const Value& b, const Pos& at) {
        using K = Value::Kind;
        if (a.kind == K::Scalar && b.kind == K::Scalar) return scalar(a.scalar + b.scalar);
        if ((a.kind == K::Derivation) != (b.kind == K::Derivation))
            fail(ErrorKind::Validation, at, "cannot add a derivation and a non-derivation");
        if (a.kind == K::Derivation) {
            Value v = a;
            *v.theta += *b.theta;
            return v;
        }
        const bool cyclic = a.kind == K::Cyclic || b.kind == K::Cyclic;
        OmegaElement sum = as_omega(a);
        sum += as_omega(b);
        if (cyclic) require_closed(sum, at);
        return element(std::move(sum), cyclic);
    }

    Value term() {
        Value acc = factor();
        while (true) {
            if (peek('.')) {
                ++pos_;
            } else if (!at_factor_start()) {
                break;
            }
            Pos fat = here();
            Value rhs = factor();
            acc = multiply(acc, rhs, fat);
        }
        return acc;
    }

    Value multiply(const Value& a, const Value& b, const Pos& at) {
        using K = Value::Kind;
        if (a.kind == K::Scalar) return scale(b, a.scalar);
        if (b.kind == K::Scalar) return scale(a, b.scalar);
        if (a.kind == K::Derivation || b.kind == K::Derivation)
            fail(ErrorKind::Validation, at, "derivations cannot be multiplied");
        if (a.kind == K::Cyclic || b.kind == K::Cyclic)
            fail(ErrorKind::Validation, at, "cyclic classes cannot be multiplied; multiply inside cyc(...)");
        OmegaElement prod = omega_multiply(*quiver_, a.omega, b.omega);
        if (prod.empty() && !a.omega.empty() && !b.omega.empty())
            fail(ErrorKind::NotComposable, at, "product of non-composable factors (every term has tail != head)");
        return element(std::move(prod));
    }

    Value factor() {
        Value base = atom();
        if (peek('^')) {
            ++pos_;
            Pos at = here();
            const unsigned long k = std::stoul(number());
            if (base.kind == Value::Kind::Scalar) {
                Rational r = 1;
                for (unsigned long i = 0; i < k; ++i) r *= base.scalar;
                return scalar(r);
            }
            if (base.kind != Value::Kind::Element) fail(ErrorKind::Validation, at, "only elements can be raised to a power");
            Value acc = element(as_omega(scalar(1)));
            for (unsigned long i = 0; i < k; ++i) acc = multiply(acc, base, at);
            return acc;
        }
        return base;
    }

    Value atom() {
        skip_ws();
        Pos at = here();
        if (pos_ >= src_.size()) fail_syntax("unexpected end of input");
        const char c = src_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num = number();
            if (peek('/')) {
                ++pos_;
                num += "/" + number();
            }
            Rational r = parse_rational(num);
            return scalar(r);
        }
        if (c == '(') {
            ++pos_;
            Value v = expr();
            expect(')');
            return v;
        }
        if (!at_ident_start()) fail_syntax("unexpected '" + std::string(1, c) + "'");
        const std::size_t save = pos_;
        std::string name = ident();
        if (name == "e" && followed_by(pos_, '(')) return idempotent();
        if (name == "cyc" && followed_by(pos_, '(')) return cyc(at);
        if (name == "d" && followed_by(pos_, '(')) {
            expect('(');
            Value v = expr();
            expect(')');
            if (v.kind == Value::Kind::Derivation) fail(ErrorKind::Validation, at, "d of a derivation");
            if (v.kind == Value::Kind::Scalar) return element(OmegaElement{});
            return element(omega_d(v.omega), v.kind == Value::Kind::Cyclic);
        }
        if ((name == "i" || name == "L") && followed_by(pos_, '(')) return calculus(name == "i", at);
        if (name == "theta" && followed_by(pos_, '{')) return derivation();
        if (pos_ < src_.size() && src_[pos_] == kStarSuffix) {
            name += kStarSuffix;
            ++pos_;
        }
        auto a = quiver_->find_arrow(name);
        if (!a) {
            pos_ = save;
            fail(ErrorKind::UnknownArrow, at, "unknown arrow '" + name + "'");
        }
        return element(omega_from(PathAlgebraElement::arrow(quiver_, *a)));
    }

    Value idempotent() {
        expect('(');
        skip_ws();
        Pos at = here();
        std::size_t start = pos_;
        while (pos_ < src_.size() && src_[pos_] != ')') ++pos_;
        std::string name(src_.substr(start, pos_ - start));
        while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
        expect(')');
        const auto& verts = quiver_->base().vertices();
        auto it = std::find(verts.begin(), verts.end(), name);
        if (it == verts.end()) fail(ErrorKind::UnknownVertex, at, "unknown vertex '" + name + "'");
        return element(omega_from(PathAlgebraElement::idempotent(quiver_, static_cast<VertexId>(it - verts.begin()))));
    }

    void require_closed(const OmegaElement& e, const Pos& at) {
        for (const auto& [p, c] : e)
            if (omega_tail(*quiver_, p) != p.vertex)
                fail(ErrorKind::NotClosed, at, "term is not a closed path, so it has no cyclic class");
    }

    Value cyc(const Pos& at) {
        expect('(');
        Pos inner = here();
        Value v = expr();
        expect(')');
        if (v.kind == Value::Kind::Derivation) fail(ErrorKind::Validation, at, "cyc of a derivation");
        OmegaElement e = as_omega(v);
        require_closed(e, inner);
        return element(std::move(e), true);
    }

    Value calculus(bool contraction, const Pos& at) {
        expect('(');
        Value th = expr();
        if (th.kind != Value::Kind::Derivation) fail(ErrorKind::Validation, at, "first argument must be a derivation");
        expect(',');
        Pos fat = here();
        Value f = expr();
        expect(')');
        if (f.kind == Value::Kind::Derivation) {
            if (contraction) fail(ErrorKind::Validation, fat, "cannot contract a derivation");
            Value v;
            v.kind = Value::Kind::Derivation;
            v.theta = commutator(*th.theta, *f.theta);
            return v;
        }
        OmegaElement e = as_omega(f);
        bool has_d = false;
        for (const auto& [p, c] : e) has_d = has_d || d_count(p) > 0;
        if (f.kind != Value::Kind::Cyclic && !has_d) {
            // on A itself: i_θ vanishes and L_θ = θ
            if (contraction) return element(OmegaElement{});
            PathAlgebraElement a(quiver_);
            for (const auto& [p, c] : e) {
                Path path{p.vertex, {}};
                for (const auto& l : p.letters) path.arrows.push_back(l.arrow);
                a.add_term(path, c);
            }
            return element(omega_from(th.theta->apply(a)));
        }
        require_closed(e, fat);
        ParsedValue typed = project(e, fat);
        OmegaElement out = std::visit(
            [&](const auto& x) -> OmegaElement {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, Necklace>) {
                    if (contraction) return OmegaElement{};
                    return omega_from(lie_derivative(*th.theta, x));
                } else if constexpr (std::is_same_v<T, OneForm> || std::is_same_v<T, TwoForm> ||
                                     std::is_same_v<T, ThreeForm>) {
                    if (contraction) return omega_from(contract(*th.theta, x));
                    return omega_from(lie_derivative(*th.theta, x));
                } else {
                    return OmegaElement{};
                }
            },
            typed);
        return element(std::move(out), true);
    }

    Value derivation() {
        expect('{');
        Derivation theta(quiver_);
        if (!peek('}')) {
            while (true) {
                skip_ws();
                Pos apos = here();
                if (!at_ident_start()) fail_syntax("expected an arrow name");
                std::string name = ident();
                if (pos_ < src_.size() && src_[pos_] == kStarSuffix) {
                    name += kStarSuffix;
                    ++pos_;
                }
                auto a = quiver_->find_arrow(name);
                if (!a) fail(ErrorKind::UnknownArrow, apos, "unknown arrow '" + name + "'");
                skip_ws();
                if (src_.substr(pos_, 2) != "->") fail_syntax("expected '->'");
                pos_ += 2;
                Pos ipos = here();
                Value im = expr();
                if (im.kind == Value::Kind::Derivation || im.kind == Value::Kind::Cyclic)
                    fail(ErrorKind::Validation, ipos, "derivation images must be path algebra elements");
                PathAlgebraElement e = to_element(as_omega(im), ipos);
                try {
                    theta.set(*a, theta(*a) + e);
                } catch (const Error& err) {
                    fail(err.kind(), ipos, std::string(err.what()).substr(std::string(kind_name(err.kind())).size() + 2));
                }
                if (peek(',')) {
                    ++pos_;
                    continue;
                }
                break;
            }
        }
        expect('}');
        Value v;
        v.kind = Value::Kind::Derivation;
        v.theta = std::move(theta);
        return v;
    }

    PathAlgebraElement to_element(const OmegaElement& e, const Pos& at) const {
        PathAlgebraElement out(quiver_);
        for (const auto& [p, c] : e) {
            Path path{p.vertex, {}};
            for (const auto& l : p.letters) {
                if (l.d) fail(ErrorKind::Validation, at, "expected an element without differentials");
                path.arrows.push_back(l.arrow);
            }
            out.add_term(path, c);
        }
        return out;
    }

    /// Projects representatives to their class; all terms must share a form degree.
    ParsedValue project(const OmegaElement& e, const Pos& at) const {
        std::optional<std::size_t> k;
        for (const auto& [p, c] : e) {
            const std::size_t n = d_count(p);
            if (k && *k != n) fail(ErrorKind::Validation, at, "terms of different form degree");
            k = n;
        }
        const std::size_t K = k.value_or(0);
        auto fill = [&](auto form) {
            for (const auto& [p, c] : e) form.add_word(p.letters, c);
            return form;
        };
        switch (K) {
            case 0: {
                Necklace n(quiver_);
                for (const auto& [p, c] : e) {
                    Path path{p.vertex, {}};
                    for (const auto& l : p.letters) path.arrows.push_back(l.arrow);
                    n.add_cycle(path, c);
                }
                return n;
            }
            case 1: return fill(OneForm(quiver_));
            case 2: return fill(TwoForm(quiver_));
            case 3: return fill(ThreeForm(quiver_));
            default: fail(ErrorKind::Validation, at, "forms of degree above 3 are not supported");
        }
    }

    ParsedValue finish(const Value& v, const Pos& at) const {
        switch (v.kind) {
            case Value::Kind::Derivation: return *v.theta;
            case Value::Kind::Scalar:
                return Rational(v.scalar) * PathAlgebraElement::unit(quiver_);
            case Value::Kind::Cyclic: return project(v.omega, at);
            case Value::Kind::Element: break;
        }
        bool has_d = false;
        for (const auto& [p, c] : v.omega) has_d = has_d || d_count(p) > 0;
        if (!has_d) return to_element(v.omega, at);
        // forms are written without cyc and denote their class
        for (const auto& [p, c] : v.omega)
            if (omega_tail(*quiver_, p) != p.vertex)
                fail(ErrorKind::NotClosed, at, "form term is not cyclically composable");
        return project(v.omega, at);
    }

    std::string_view src_;
    QuiverPtr quiver_;
    std::size_t pos_ = 0;
    Pos start_of_input_{};
};

}  // namespace detail

inline ParsedValue parse_expression(std::string_view src, const QuiverPtr& q) {
    return detail::Parser(src, q).parse_top();
}

inline const char* value_kind(const ParsedValue& v) {
    static constexpr const char* names[] = {"element", "necklace", "1-form", "2-form", "3-form", "derivation"};
    return names[v.index()];
}

/// Parses and requires a given kind. Elements are accepted where a necklace
/// is expected and projected (every term must be closed).
template <typename T>
T parse_as(std::string_view src, const QuiverPtr& q) {
    ParsedValue v = parse_expression(src, q);
    if constexpr (std::is_same_v<T, Necklace>) {
        if (auto* e = std::get_if<PathAlgebraElement>(&v)) {
            for (const auto& [p, c] : e->terms())
                if (!is_closed(*q, p))
                    throw Error(ErrorKind::NotClosed, "term '" + format_path(*q, p) + "' is not a closed path");
            return project_to_necklace(*e);
        }
    }
    if constexpr (!std::is_same_v<T, PathAlgebraElement> && !std::is_same_v<T, Derivation>) {
        // zero parses as an element; accept it for any form degree
        if (auto* e = std::get_if<PathAlgebraElement>(&v); e && e->is_zero()) return T(q);
    }
    if (auto* t = std::get_if<T>(&v)) return *t;
    throw Error(ErrorKind::Validation, std::string("expected a ") + value_kind(ParsedValue(std::in_place_type<T>, q)) +
                                           ", got a " + value_kind(v));
}

inline std::string print_value(const ParsedValue& v) {
    return std::visit([](const auto& x) { return to_string(x); }, v);
}

}  // namespace ncsg

#endif  // NCSG_DSL_HPP
