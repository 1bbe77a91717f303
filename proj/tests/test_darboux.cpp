#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ncsg/darboux.hpp"
#include "ncsg/enumerate.hpp"
#include "ncsg/random.hpp"

using namespace ncsg;
using namespace ncsg::testing;

namespace {

/// Two loops x, y at one vertex; the double has x, x*, y, y*.
QuiverPtr two_loop() { return double_quiver(Quiver({"0"}, {{"x", "0", "0"}, {"y", "0", "0"}})); }

FormalAutomorphism automorphism(const QuiverPtr& q, std::size_t n,
                                std::initializer_list<std::pair<const char*, PathAlgebraElement>> extra) {
    std::vector<PathAlgebraElement> im;
    for (ArrowId a = 0; a < q->arrow_count(); ++a) im.push_back(PathAlgebraElement::arrow(q, a));
    for (const auto& [name, e] : extra) im[q->arrow_id(name)] += e;
    return FormalAutomorphism(q, n, std::move(im));
}

FormalAutomorphism random_automorphism(const QuiverPtr& q, std::size_t n, Rng& rng) {
    PathCatalog cat(q, 3);
    std::vector<PathAlgebraElement> im;
    for (ArrowId a = 0; a < q->arrow_count(); ++a)
        im.push_back(PathAlgebraElement::arrow(q, a) + random_parallel(cat, rng, 0, 0, {2, 3, 2, 2}));
    return FormalAutomorphism(q, n, std::move(im));
}

}  // namespace

TEST(Automorphism, RejectsNonIdentityLinearPart) {
    auto q = one_loop();
    EXPECT_THROW(FormalAutomorphism(q, 3, {elem(q, "x", 2), elem(q, "x*")}), Error);
    EXPECT_THROW(FormalAutomorphism(q, 3, {elem(q, "x") + PathAlgebraElement::unit(q), elem(q, "x*")}), Error);
}

TEST(Pullback, IdentityAndHandExpansion) {
    auto q = one_loop();
    auto id = FormalAutomorphism(q, 4);
    auto w = form_of<2>(q, "dx dx*") + form_of<2>(q, "x dx dx*", 3);
    EXPECT_EQ(pullback(id, w, 4), w);

    // Φ(x) = x + x x: d(Φx) = dx + dx x + x dx
    auto phi = automorphism(q, 4, {{"x", elem(q, "x x")}});
    auto expected = form_of<2>(q, "dx dx*") + form_of<2>(q, "dx x dx*") + form_of<2>(q, "x dx dx*");
    EXPECT_EQ(pullback(phi, form_of<2>(q, "dx dx*"), 1), expected);
    EXPECT_EQ(pullback(phi, form_of<2>(q, "dx dx*"), 0), form_of<2>(q, "dx dx*"));
    EXPECT_EQ(pullback(phi, cyc(q, "x x*"), 3), cyc(q, "x x*") + cyc(q, "x x x*"));
}

TEST(Pullback, CommutesWithD) {
    auto q = two_loop();
    PathCatalog cat(q, 3);
    for (std::uint64_t t = 0; t < 10; ++t) {
        Rng rng(derive_seed(29, "pullback-d", t));
        auto phi = random_automorphism(q, 4, rng);
        auto f = random_necklace(cat, rng, {1, 3, 3, 3});
        auto a = random_form<1>(cat, rng, {0, 2, 2, 3});
        EXPECT_EQ(pullback(phi, d(f), 3), d(pullback(phi, f, 4)).truncated(3));
        EXPECT_EQ(pullback(phi, d(a), 3), d(pullback(phi, a, 4)).truncated(3));
    }
}

TEST(Pullback, RespectsComposition) {
    auto q = one_loop();
    PathCatalog cat(q, 3);
    for (std::uint64_t t = 0; t < 10; ++t) {
        Rng rng(derive_seed(29, "compose", t));
        auto phi = random_automorphism(q, 4, rng), psi = random_automorphism(q, 4, rng);
        auto b = random_form<2>(cat, rng, {0, 2, 3, 3});
        auto f = random_necklace(cat, rng, {1, 3, 3, 3});
        auto both = compose(phi, psi);
        EXPECT_EQ(pullback(both, b, 4), pullback(psi, pullback(phi, b, 4), 4));
        EXPECT_EQ(pullback(both, f, 4), pullback(psi, pullback(phi, f, 4), 4));
    }
}

TEST(Automorphism, InverseUndoesPullback) {
    auto q = two_loop();
    PathCatalog cat(q, 3);
    for (std::uint64_t t = 0; t < 5; ++t) {
        Rng rng(derive_seed(29, "inverse", t));
        auto phi = random_automorphism(q, 4, rng);
        auto psi = inverse(phi);
        EXPECT_TRUE(compose(phi, psi).is_identity());
        auto b = random_form<2>(cat, rng, {0, 2, 3, 3});
        EXPECT_EQ(pullback(psi, pullback(phi, b, 4), 4), b.truncated(4));
    }
}

TEST(Darboux, ConstantFormGivesIdentity) {
    auto q = one_loop();
    auto r = darboux_normalize(symplectic_form(q), 5);
    EXPECT_TRUE(r.phi.is_identity());
    EXPECT_TRUE(r.residual.is_zero());
}

TEST(Darboux, RejectsDegenerateAndNonClosed) {
    auto q = one_loop();
    try {
        darboux_normalize(d(form_of<1>(q, "x x dx*")), 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Degenerate);
    }
    auto q2 = two_loop();
    EXPECT_THROW(darboux_normalize(form_of<2>(q2, "dx dx*"), 4), Error);
    try {
        darboux_normalize(symplectic_form(q) + form_of<2>(q, "x dx dx*"), 4);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::NotClosed);
    }
    EXPECT_THROW(darboux_normalize(symplectic_form(two_vertex()), 3), Error);
}

TEST(Darboux, NormalizesRandomPerturbations) {
    for (auto q : {one_loop(), two_loop()}) {
        PathCatalog cat(q, 3);
        for (std::uint64_t t = 0; t < 5; ++t) {
            Rng rng(derive_seed(29, "darboux", t));
            auto beta = random_form<1>(cat, rng, {1, 3, 3, 3});
            auto omega = Rational(rng.nonzero(3)) * symplectic_form(q) + d(beta);
            auto r = darboux_normalize(omega, 4);
            EXPECT_EQ(pullback(r.phi, omega, 4), r.omega0);
            EXPECT_EQ(pullback(r.inverse, r.omega0, 4), omega.truncated(4));
        }
    }
}
