#ifndef NCSG_TESTS_FIXTURES_HPP
#define NCSG_TESTS_FIXTURES_HPP

#include <sstream>
#include <string>
#include <vector>

#include "ncsg/forms.hpp"

namespace ncsg::testing {

/// One vertex, one loop x; the double adds x*.
inline QuiverPtr one_loop() { return double_quiver(Quiver({"0"}, {{"x", "0", "0"}})); }

/// Vertices 1, 2; a: 1 -> 2 and a loop b at 1.
inline QuiverPtr two_vertex() {
    return double_quiver(Quiver({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "1"}}));
}

/// Path from space-separated arrow names, written left to right.
inline Path path_of(const QuiverPtr& q, const std::string& spec) {
    std::istringstream in(spec);
    std::vector<ArrowId> ids;
    for (std::string tok; in >> tok;) ids.push_back(q->arrow_id(tok));
    auto p = make_path(*q, ids);
    if (!p) throw Error(ErrorKind::NotComposable, "test path '" + spec + "' does not compose");
    return *p;
}

inline PathAlgebraElement elem(const QuiverPtr& q, const std::string& spec, const Rational& c = 1) {
    return PathAlgebraElement::path(q, path_of(q, spec), c);
}

inline Necklace cyc(const QuiverPtr& q, const std::string& spec, const Rational& c = 1) {
    return Necklace::cycle(q, path_of(q, spec), c);
}

/// Word from tokens like "x", "dx*": a leading 'd' marks a differential.
inline Word word_of(const QuiverPtr& q, const std::string& spec) {
    std::istringstream in(spec);
    Word w;
    for (std::string tok; in >> tok;) {
        if (tok.size() > 1 && tok[0] == 'd' && q->find_arrow(tok.substr(1)) && !q->find_arrow(tok))
            w.push_back({q->arrow_id(tok.substr(1)), true});
        else
            w.push_back({q->arrow_id(tok), false});
    }
    return w;
}

template <std::size_t K>
Form<K> form_of(const QuiverPtr& q, const std::string& spec, const Rational& c = 1) {
    Form<K> f(q);
    f.add_word(word_of(q, spec), c);
    return f;
}

}  // namespace ncsg::testing

#endif  // NCSG_TESTS_FIXTURES_HPP
