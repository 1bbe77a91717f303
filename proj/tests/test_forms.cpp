#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ncsg/enumerate.hpp"
#include "ncsg/random.hpp"

using namespace ncsg;
using namespace ncsg::testing;

TEST(Forms, DifferentialOfNecklaces) {
    auto q = one_loop();
    EXPECT_EQ(d(cyc(q, "x x*")), form_of<1>(q, "x* dx") + form_of<1>(q, "x dx*"));
    EXPECT_EQ(d(cyc(q, "x x")), form_of<1>(q, "x dx", 2));
    EXPECT_TRUE(d(Necklace::vertex(q, 0)).is_zero());
    EXPECT_EQ(to_string(d(cyc(q, "x x"))), "2 x d(x)");
}

TEST(Forms, CyclicRotationAndSigns) {
    auto q = one_loop();
    // a 1-form word can be rotated freely
    EXPECT_EQ(form_of<1>(q, "dx x*"), form_of<1>(q, "x* dx"));
    // moving a 1-form past a 1-form costs a sign
    EXPECT_EQ(form_of<2>(q, "dx* dx"), -form_of<2>(q, "dx dx*"));
    // dx dx is odd under its own rotation and vanishes
    EXPECT_TRUE(form_of<2>(q, "dx dx").is_zero());
    EXPECT_FALSE(form_of<2>(q, "x dx dx").is_zero());
    EXPECT_EQ(form_of<2>(q, "dx x dx"), -form_of<2>(q, "x dx dx"));
}

TEST(Forms, NonComposableWordsVanish) {
    auto q = two_vertex();
    EXPECT_TRUE(form_of<1>(q, "da").is_zero());
    EXPECT_FALSE(form_of<1>(q, "a* da").is_zero());
    EXPECT_EQ(form_of<2>(q, "da da*"), -form_of<2>(q, "da* da"));
}

TEST(Forms, DifferentialExamples) {
    auto q = one_loop();
    // d(x* dx) = dx* dx = −dx dx*
    EXPECT_EQ(d(form_of<1>(q, "x* dx")), -form_of<2>(q, "dx dx*"));
    // x x dx is exact, hence closed: d(x x dx) = dx x dx + x dx dx = 0
    EXPECT_TRUE(d(form_of<1>(q, "x x dx")).is_zero());
    EXPECT_TRUE(d(symplectic_form(q)).is_zero());
}

class FormProperties : public ::testing::TestWithParam<int> {
protected:
    QuiverPtr quiver() const { return GetParam() == 0 ? one_loop() : two_vertex(); }
};

TEST_P(FormProperties, DSquaredVanishes) {
    auto q = quiver();
    PathCatalog cat(q, 5);
    for (std::uint64_t t = 0; t < 30; ++t) {
        Rng rng(derive_seed(3, "dd", t));
        auto f = random_necklace(cat, rng, {0, 5, 3, 3});
        EXPECT_TRUE(d(d(f)).is_zero());
        auto a = random_form<1>(cat, rng, {0, 4, 3, 3});
        EXPECT_TRUE(d(d(a)).is_zero());
    }
}

TEST_P(FormProperties, CartanRelations) {
    auto q = quiver();
    PathCatalog cat(q, 4);
    RandomShape small{0, 2, 2, 3};
    for (std::uint64_t t = 0; t < 20; ++t) {
        Rng rng(derive_seed(3, "cartan", t));
        auto th = random_derivation(cat, rng, small), ga = random_derivation(cat, rng, small);
        auto f = random_necklace(cat, rng, {0, 3, 3, 3});
        auto a = random_form<1>(cat, rng, {0, 3, 3, 3});
        auto b = random_form<2>(cat, rng, {0, 2, 2, 3});
        // L = d i + i d
        EXPECT_EQ(lie_derivative(th, f), contract(th, d(f)));
        EXPECT_EQ(lie_derivative(th, a), d(contract(th, a)) + contract(th, d(a)));
        EXPECT_EQ(lie_derivative(th, b), d(contract(th, b)) + contract(th, d(b)));
        // [L, d] = 0
        EXPECT_EQ(lie_derivative(th, d(f)), d(lie_derivative(th, f)));
        EXPECT_EQ(lie_derivative(th, d(a)), d(lie_derivative(th, a)));
        // [L_θ, i_γ] = i_[θ,γ]
        auto br = commutator(th, ga);
        EXPECT_EQ(lie_derivative(th, contract(ga, a)) - contract(ga, lie_derivative(th, a)), contract(br, a));
        EXPECT_EQ(lie_derivative(th, contract(ga, b)) - contract(ga, lie_derivative(th, b)), contract(br, b));
        // [L_θ, L_γ] = L_[θ,γ]
        EXPECT_EQ(lie_derivative(th, lie_derivative(ga, f)) - lie_derivative(ga, lie_derivative(th, f)),
                  lie_derivative(br, f));
        EXPECT_EQ(lie_derivative(th, lie_derivative(ga, a)) - lie_derivative(ga, lie_derivative(th, a)),
                  lie_derivative(br, a));
    }
}

TEST_P(FormProperties, HomotopyInvertsD) {
    auto q = quiver();
    PathCatalog cat(q, 5);
    for (std::uint64_t t = 0; t < 30; ++t) {
        Rng rng(derive_seed(3, "homotopy", t));
        auto f = random_necklace(cat, rng, {1, 5, 3, 3});
        EXPECT_EQ(euler_homotopy(d(f)), f);
        auto a = random_form<1>(cat, rng, {0, 3, 3, 3});
        auto da = d(a);
        EXPECT_EQ(d(euler_homotopy(da)), da);
    }
}

TEST_P(FormProperties, HamiltonianContractsSymplecticForm) {
    auto q = quiver();
    PathCatalog cat(q, 4);
    auto omega = symplectic_form(q);
    for (std::uint64_t t = 0; t < 20; ++t) {
        Rng rng(derive_seed(3, "hamiltonian-form", t));
        auto f = random_necklace(cat, rng, {1, 4, 3, 3});
        auto th = hamiltonian_derivation(f);
        // i_{θ_f} ω = −df under the normalization L_{θ_f} g = {f, g}
        EXPECT_EQ(contract(th, omega), -d(f));
        EXPECT_EQ(derivation_from_oneform(contract(th, omega)), th);
        EXPECT_TRUE(lie_derivative(th, omega).is_zero());
    }
}

INSTANTIATE_TEST_SUITE_P(Quivers, FormProperties, ::testing::Values(0, 1));

TEST(Forms, ContractionExamples) {
    auto q = one_loop();
    auto eu = euler_derivation(q);
    EXPECT_EQ(contract(eu, d(cyc(q, "x x"))), cyc(q, "x x", 2));
    Derivation th(q);
    th.set("x", PathAlgebraElement::idempotent(q, 0));
    EXPECT_EQ(contract(th, form_of<2>(q, "dx dx*")), form_of<1>(q, "dx*"));
    EXPECT_EQ(contract(th, form_of<2>(q, "dx* dx")), -form_of<1>(q, "dx*"));
}

TEST(Forms, HomotopyExamples) {
    auto q = one_loop();
    EXPECT_EQ(euler_homotopy(form_of<1>(q, "x dx", 2)), cyc(q, "x x"));
    auto expected = form_of<1>(q, "x dx*", Rational(1, 2)) - form_of<1>(q, "x* dx", Rational(1, 2));
    EXPECT_EQ(euler_homotopy(form_of<2>(q, "dx dx*")), expected);
    try {
        euler_homotopy(form_of<1>(q, "x* dx"));
        FAIL() << "non-closed form accepted";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotClosed);
    }
}

TEST(Forms, DerivationFromOneForm) {
    auto q = one_loop();
    auto th = derivation_from_oneform(form_of<1>(q, "dx*"));
    EXPECT_EQ(th(q->arrow_id("x")), PathAlgebraElement::idempotent(q, 0));
    EXPECT_TRUE(th(q->arrow_id("x*")).is_zero());
    EXPECT_EQ(contract(th, symplectic_form(q)), form_of<1>(q, "dx*"));
    EXPECT_TRUE(derivation_from_oneform(OneForm(q)).is_zero());
}
