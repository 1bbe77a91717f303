#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ncsg/dsl.hpp"
#include "ncsg/enumerate.hpp"
#include "ncsg/random.hpp"

using namespace ncsg;
using namespace ncsg::testing;

namespace {

QuiverPtr a2() { return double_quiver(Quiver({"1", "2"}, {{"a", "1", "2"}})); }

ErrorKind kind_of(const std::string& src, const QuiverPtr& q) {
    try {
        parse_expression(src, q);
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error for '" << src << "'";
    return ErrorKind::Validation;
}

}  // namespace

TEST(Dsl, ParsesElementsAndNecklaces) {
    auto q = one_loop();
    EXPECT_EQ(parse_as<Necklace>("cyc(x x* )", q), cyc(q, "x x*"));
    EXPECT_EQ(parse_as<PathAlgebraElement>("2 x x* - 1/3 x", q), elem(q, "x x*", 2) - elem(q, "x", Rational(1, 3)));
    EXPECT_EQ(parse_as<PathAlgebraElement>("(x + x*)(x - x*)", q),
              elem(q, "x x") - elem(q, "x x*") + elem(q, "x* x") - elem(q, "x* x*"));
    EXPECT_EQ(parse_as<PathAlgebraElement>("x^3 . x*", q), elem(q, "x x x x*"));
    EXPECT_EQ(parse_as<PathAlgebraElement>("x*x", q), elem(q, "x* x"));
    EXPECT_EQ(parse_as<Necklace>("x x x* x", q), cyc(q, "x x x x*"));
    EXPECT_TRUE(parse_as<Necklace>("cyc(x x* - x* x)", q).is_zero());
    EXPECT_EQ(parse_as<Necklace>("cyc(e(0)) + 2", q), Necklace::vertex(q, 0, 3));
}

TEST(Dsl, ParsesFormsAndDerivations) {
    auto q = one_loop();
    EXPECT_EQ(parse_as<OneForm>("d(cyc(x x*))", q), d(cyc(q, "x x*")));
    EXPECT_EQ(parse_as<OneForm>("x* d(x)", q), form_of<1>(q, "x* dx"));
    EXPECT_EQ(parse_as<TwoForm>("d(x) d(x*)", q), symplectic_form(q));
    EXPECT_EQ(parse_as<TwoForm>("d(x* d(x))", q), -symplectic_form(q));
    auto th = parse_as<Derivation>("theta{x -> -x, x* -> x*}", q);
    EXPECT_EQ(th, hamiltonian_derivation(cyc(q, "x x*")));
    EXPECT_EQ(parse_as<Necklace>("i(theta{x -> e(0)}, d(cyc(x x)))", q), cyc(q, "x", 2));
    EXPECT_EQ(parse_as<OneForm>("i(theta{x -> e(0)}, d(x) d(x*))", q), form_of<1>(q, "dx*"));
    EXPECT_EQ(parse_as<Necklace>("L(theta{x -> -x, x* -> x*}, cyc(x x))", q), cyc(q, "x x", -2));
    EXPECT_EQ(parse_as<PathAlgebraElement>("L(theta{x -> x x}, x x*)", q), elem(q, "x x x*"));
}

TEST(Dsl, Diagnostics) {
    auto q = one_loop();
    EXPECT_EQ(kind_of("x + q", q), ErrorKind::UnknownArrow);
    EXPECT_EQ(kind_of("cyc(a a)", a2()), ErrorKind::NotComposable);
    EXPECT_EQ(kind_of("cyc(a)", a2()), ErrorKind::NotClosed);
    EXPECT_EQ(kind_of("x +", q), ErrorKind::Parse);
    EXPECT_EQ(kind_of("(x", q), ErrorKind::Parse);
    EXPECT_EQ(kind_of("e(7)", q), ErrorKind::UnknownVertex);
    EXPECT_EQ(kind_of("cyc(x) x", q), ErrorKind::Validation);
    EXPECT_EQ(kind_of("theta{x -> x*}", a2()), ErrorKind::UnknownArrow);
    EXPECT_EQ(kind_of("theta{a -> a*}", a2()), ErrorKind::NotComposable);
    try {
        parse_expression("x +\n  x $", q);
        FAIL();
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("line 2, column 5"), std::string::npos) << e.what();
    }
    try {
        parse_expression("x + q", q);
    } catch (const Error& e) {
        EXPECT_NE(std::string(e.what()).find("column 5"), std::string::npos) << e.what();
    }
}

TEST(Dsl, PrintParseRoundTrip) {
    for (auto q : {one_loop(), two_vertex()}) {
        PathCatalog cat(q, 4);
        for (std::uint64_t t = 0; t < 30; ++t) {
            Rng rng(derive_seed(31, "dsl-roundtrip", t));
            RandomShape s{0, 4, 3, 3};
            auto f = random_necklace(cat, rng, s);
            EXPECT_EQ(parse_as<Necklace>(to_string(f), q), f) << to_string(f);
            auto e = random_element(cat, rng, s);
            EXPECT_EQ(parse_as<PathAlgebraElement>(to_string(e), q), e) << to_string(e);
            auto a = random_form<1>(cat, rng, s);
            EXPECT_EQ(parse_as<OneForm>(to_string(a), q), a) << to_string(a);
            auto b = random_form<2>(cat, rng, s);
            EXPECT_EQ(parse_as<TwoForm>(to_string(b), q), b) << to_string(b);
            auto th = random_derivation(cat, rng, {0, 2, 2, 3});
            EXPECT_EQ(parse_as<Derivation>(to_string(th), q), th) << to_string(th);
            // printing is canonical: print ∘ parse ∘ print = print
            EXPECT_EQ(print_value(parse_expression(to_string(b), q)), to_string(b));
        }
    }
}
