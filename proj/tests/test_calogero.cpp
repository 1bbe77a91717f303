#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ncsg/calogero.hpp"

using namespace ncsg;
using namespace ncsg::testing;

namespace {

std::vector<Rational> distinct_positions(Rng& rng, std::size_t n) {
    std::vector<Rational> x;
    while (x.size() < n) {
        Rational v(rng.uniform(-20, 20), rng.uniform(1, 4));
        v.canonicalize();
        if (std::find(x.begin(), x.end(), v) == x.end()) x.push_back(v);
    }
    return x;
}

std::vector<Rational> momenta(Rng& rng, std::size_t n) {
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i) p.emplace_back(rng.uniform(-5, 5));
    return p;
}

}  // namespace

TEST(CM, SmallPoints) {
    auto p1 = cm_point({0}, {0});
    EXPECT_TRUE(p1.X.is_zero());
    EXPECT_TRUE(p1.Y.is_zero());
    EXPECT_TRUE(cm_membership(p1.X, p1.Y));

    auto p2 = cm_point({0, 1}, {0, 0});
    Matrix ones(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) ones(i, j) = 1;
    EXPECT_EQ(cm_shifted_commutator(p2.X, p2.Y), ones);
    EXPECT_TRUE(cm_membership(p2.X, p2.Y));
}

TEST(CM, MembershipRejects) {
    EXPECT_FALSE(cm_membership(Matrix(2, 2), Matrix(2, 2)));
    EXPECT_THROW(cm_membership(Matrix(2, 2), Matrix(3, 3)), Error);
    EXPECT_THROW(cm_point({1, 1}, {0, 0}), Error);
}

TEST(CM, RandomPointsAreMembers) {
    for (std::uint64_t t = 0; t < 25; ++t) {
        Rng rng(derive_seed(23, "cm", t));
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        auto pt = cm_point(distinct_positions(rng, n), momenta(rng, n));
        auto m = cm_shifted_commutator(pt.X, pt.Y);
        EXPECT_EQ(rank(m), 1u);
        EXPECT_EQ(trace(m), static_cast<long>(n));
    }
}

TEST(CM, CoadjointEvaluation) {
    auto q = cm_quiver();
    auto pt = cm_point({0, 1}, {0, 0});
    // X = diag(0, 1), Y = [[0, -1], [1, 0]]: XY = [[0, 0], [1, 0]]
    EXPECT_EQ(coadjoint_eval(cyc(q, "x x*"), pt), 0);
    EXPECT_EQ(coadjoint_eval(cyc(q, "x* x*"), pt), -2);
    Necklace comm = project_to_necklace(elem(q, "x x x*") - elem(q, "x x* x"));
    EXPECT_EQ(coadjoint_eval(comm, pt), 0);
    // invariant under simultaneous conjugation
    Matrix g(2, 2);
    g(0, 0) = 1, g(0, 1) = 2, g(1, 0) = 1, g(1, 1) = 3;
    auto gi = *inverse(g);
    CMPoint conj{g * pt.X * gi, g * pt.Y * gi};
    EXPECT_TRUE(cm_membership(conj.X, conj.Y));
    for (const char* w : {"x x*", "x x x* x*", "x x* x x*", "x* x* x*"})
        EXPECT_EQ(coadjoint_eval(cyc(q, w), conj), coadjoint_eval(cyc(q, w), pt)) << w;
}

TEST(CM, FlowsMatchBrackets) {
    auto q = cm_quiver();
    PathCatalog cat(q, 4);
    for (std::uint64_t t = 0; t < 10; ++t) {
        Rng rng(derive_seed(23, "flow", t));
        const auto n = static_cast<std::size_t>(rng.uniform(1, 3));
        auto pt = cm_point(distinct_positions(rng, n), momenta(rng, n));
        auto f = random_necklace(cat, rng, {1, 4, 3, 3});
        auto a = cm_flow_x2(f, pt), b = cm_flow_y2(f, pt);
        EXPECT_TRUE(a.equal()) << to_string(f);
        EXPECT_TRUE(b.equal()) << to_string(f);
    }
}

TEST(CM, SeparatesNonConjugatePoints) {
    auto q = cm_quiver();
    auto a = cm_point({0, 1}, {0, 0}), b = cm_point({0, 2}, {0, 0});
    auto f = separating_necklace(q, a, b, 4);
    ASSERT_TRUE(f.has_value());
    EXPECT_EQ(to_string(*f), "cyc(x)");
    EXPECT_FALSE(separating_necklace(q, a, a, 4).has_value());
}
