#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ncsg/bracket_oracle.hpp"
#include "ncsg/enumerate.hpp"
#include "ncsg/random.hpp"

using namespace ncsg;
using namespace ncsg::testing;

TEST(Necklace, RotationsAgree) {
    auto q = one_loop();
    EXPECT_EQ(project_to_necklace(elem(q, "x x x* x")), cyc(q, "x x x x*"));
    EXPECT_EQ(cyc(q, "x* x x"), cyc(q, "x x x*"));
    EXPECT_EQ(to_string(cyc(q, "x* x x")), "cyc(x x x*)");
}

TEST(Necklace, CommutatorsVanish) {
    auto q = one_loop();
    auto x = elem(q, "x"), y = elem(q, "x*");
    EXPECT_TRUE(project_to_necklace(x * y - y * x).is_zero());
    auto f = elem(q, "x x*") + elem(q, "x*", 2), g = elem(q, "x* x* x") - elem(q, "x");
    EXPECT_TRUE(project_to_necklace(f * g - g * f).is_zero());
}

TEST(Necklace, OpenPathsProjectToZero) {
    auto q = two_vertex();
    EXPECT_TRUE(project_to_necklace(elem(q, "a")).is_zero());
    EXPECT_TRUE(project_to_necklace(elem(q, "a b")).is_zero());
    EXPECT_FALSE(project_to_necklace(elem(q, "a* a")).is_zero());
    // a* a and a a* are the same necklace even though they sit at different vertices
    EXPECT_EQ(project_to_necklace(elem(q, "a* a")), project_to_necklace(elem(q, "a a*")));
}

TEST(Necklace, DegreeZeroPartIsPerVertex) {
    auto q = two_vertex();
    auto f = Necklace::vertex(q, 0, 2) + Necklace::vertex(q, 1, -1);
    EXPECT_EQ(f.degree0(0), 2);
    EXPECT_EQ(f.degree0(1), -1);
    EXPECT_EQ(f.degree(), 0);
    EXPECT_EQ(to_string(f), "2 cyc(e(1)) - cyc(e(2))");
}

TEST(CyclicDerivative, Examples) {
    auto q = one_loop();
    EXPECT_EQ(cyclic_derivative(cyc(q, "x x x"), "x"), elem(q, "x x", 3));
    EXPECT_EQ(cyclic_derivative(cyc(q, "x x*"), "x"), elem(q, "x*"));
    EXPECT_TRUE(cyclic_derivative(cyc(q, "x* x*"), "x").is_zero());
    // ∂(x x x*)/∂x = x x* + x* x
    EXPECT_EQ(cyclic_derivative(cyc(q, "x x x*"), "x"), elem(q, "x x*") + elem(q, "x* x"));
    EXPECT_EQ(cyclic_derivative(cyc(q, "x"), "x"), PathAlgebraElement::idempotent(q, 0));
}

TEST(CyclicDerivative, LandsBetweenTailAndHead) {
    auto q = two_vertex();
    auto f = cyc(q, "a* a b");
    auto da = cyclic_derivative(f, "a");
    EXPECT_EQ(da, elem(q, "b a*"));
    for (const auto& [p, c] : da.terms()) {
        EXPECT_EQ(head(p), q->tail(q->arrow_id("a")));
        EXPECT_EQ(tail(*q, p), q->head(q->arrow_id("a")));
    }
}

TEST(Bracket, Examples) {
    auto q = one_loop();
    EXPECT_EQ(necklace_bracket(cyc(q, "x"), cyc(q, "x*")), Necklace::vertex(q, 0));
    EXPECT_EQ(necklace_bracket(cyc(q, "x x"), cyc(q, "x* x*")), cyc(q, "x x*", 4));
    EXPECT_EQ(necklace_bracket(cyc(q, "x x*"), cyc(q, "x x")), cyc(q, "x x", -2));
    EXPECT_TRUE(necklace_bracket(cyc(q, "x x x"), Necklace::vertex(q, 0)).is_zero());
}

TEST(Bracket, ExamplesAgreeWithOracle) {
    auto q = one_loop();
    EXPECT_EQ(bracket_tensor_oracle(cyc(q, "x"), cyc(q, "x*")), Necklace::vertex(q, 0));
    EXPECT_EQ(bracket_tensor_oracle(cyc(q, "x x"), cyc(q, "x* x*")), cyc(q, "x x*", 4));
    EXPECT_EQ(bracket_tensor_oracle(cyc(q, "x x*"), cyc(q, "x x")), cyc(q, "x x", -2));
}

class BracketProperties : public ::testing::TestWithParam<int> {
protected:
    QuiverPtr quiver() const { return GetParam() == 0 ? one_loop() : two_vertex(); }
};

TEST_P(BracketProperties, AntisymmetryJacobiOracle) {
    auto q = quiver();
    PathCatalog cat(q, 4);
    RandomShape s{0, 4, 3, 3};
    for (std::uint64_t t = 0; t < 30; ++t) {
        Rng rng(derive_seed(11, "bracket-props", t));
        auto f = random_necklace(cat, rng, s), g = random_necklace(cat, rng, s), h = random_necklace(cat, rng, s);
        auto fg = necklace_bracket(f, g);
        EXPECT_EQ(fg, -necklace_bracket(g, f));
        EXPECT_EQ(fg, bracket_tensor_oracle(f, g));
        auto jac = necklace_bracket(f, necklace_bracket(g, h)) + necklace_bracket(g, necklace_bracket(h, f)) +
                   necklace_bracket(h, necklace_bracket(f, g));
        EXPECT_TRUE(jac.is_zero()) << to_string(jac);
    }
}

TEST_P(BracketProperties, HamiltonianDerivations) {
    auto q = quiver();
    PathCatalog cat(q, 4);
    RandomShape s{0, 4, 2, 3};
    for (std::uint64_t t = 0; t < 20; ++t) {
        Rng rng(derive_seed(11, "hamiltonian", t));
        auto f = random_necklace(cat, rng, s), g = random_necklace(cat, rng, s);
        auto tf = hamiltonian_derivation(f), tg = hamiltonian_derivation(g);
        EXPECT_EQ(lie_derivative(tf, g), necklace_bracket(f, g));
        EXPECT_EQ(commutator(tf, tg), hamiltonian_derivation(necklace_bracket(f, g)));
    }
}

INSTANTIATE_TEST_SUITE_P(Quivers, BracketProperties, ::testing::Values(0, 1));

TEST(Hamiltonian, Examples) {
    auto q = one_loop();
    auto t1 = hamiltonian_derivation(cyc(q, "x x*"));
    EXPECT_EQ(t1(q->arrow_id("x")), -elem(q, "x"));
    EXPECT_EQ(t1(q->arrow_id("x*")), elem(q, "x*"));
    auto t2 = hamiltonian_derivation(cyc(q, "x x"));
    EXPECT_TRUE(t2(q->arrow_id("x")).is_zero());
    EXPECT_EQ(t2(q->arrow_id("x*")), elem(q, "x", 2));
    EXPECT_TRUE(hamiltonian_derivation(Necklace::vertex(q, 0, 5)).is_zero());
}

TEST(Derivation, RejectsNonParallelImages) {
    auto q = two_vertex();
    Derivation theta(q);
    EXPECT_THROW(theta.set("a", elem(q, "b")), Error);
    EXPECT_NO_THROW(theta.set("a", elem(q, "a b")));
    EXPECT_EQ(theta.apply(elem(q, "a* a")), elem(q, "a* a b"));
}

TEST(Derivation, EulerScalesByDegree) {
    auto q = two_vertex();
    PathCatalog cat(q, 5);
    auto eu = euler_derivation(q);
    for (std::size_t deg = 1; deg <= 5; ++deg)
        for (const auto& c : cat.cycles(deg)) {
            auto f = Necklace::cycle(q, c);
            EXPECT_EQ(lie_derivative(eu, f), Rational(deg) * f);
        }
}
