#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "ncsg/verify.hpp"

using namespace ncsg;
using namespace ncsg::testing;

TEST(JsonIo, QuiverRoundTrip) {
    auto q = two_vertex();
    auto j = quiver_to_json(*q);
    EXPECT_EQ(j["arrows"].size(), 4u);
    EXPECT_EQ(j["arrows"][1]["name"], "a*");
    EXPECT_EQ(j["arrows"][1]["tail"], "2");
    EXPECT_EQ(*quiver_from_json(j), *q);
}

TEST(JsonIo, QuiverErrors) {
    EXPECT_THROW(quiver_from_json(json::parse(R"({"vertices":["1"]})")), Error);
    try {
        quiver_from_json(json::parse(R"({"vertices":["1"],"arrows":[{"name":"a","tail":"1","head":"9"}]})"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnknownVertex);
    }
}

TEST(JsonIo, RepPointRoundTripAndShapes) {
    auto q = two_vertex();
    Rng rng(11);
    auto pt = random_point(q, DimensionVector{{2, 1}}, rng);
    pt.mats[0](0, 1) = Rational(-3, 7);
    auto back = rep_point_from_json(to_json(pt), q);
    EXPECT_EQ(back.mats, pt.mats);
    auto j = to_json(pt);
    j["mats"]["a"] = json::parse(R"([["1","2"]])");  // a: 1 -> 2 is 1x2, fine
    EXPECT_NO_THROW(rep_point_from_json(j, q));
    j["mats"]["a"] = json::parse(R"([["1"],["2"]])");
    try {
        rep_point_from_json(j, q);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
    }
    j["mats"] = json::parse(R"({"c":[["1"]]})");
    EXPECT_THROW(rep_point_from_json(j, q), Error);
}

TEST(JsonIo, Dims) {
    auto q = two_vertex();
    EXPECT_EQ(parse_dims("2", *q).n, (std::vector<std::size_t>{2, 2}));
    EXPECT_EQ(parse_dims("2,1", *q).n, (std::vector<std::size_t>{2, 1}));
    EXPECT_THROW(parse_dims("2,x", *q), Error);
    EXPECT_THROW(parse_dims("1,2,3", *q), Error);
    EXPECT_THROW(parse_dims("-1", *q), Error);
}

TEST(JsonIo, CmPoint) {
    auto j = json::parse(R"({"X":[["0","0"],["0","1"]],"Y":[["1","-1"],["1","2"]]})");
    auto pt = cm_point_from_json(j);
    EXPECT_TRUE(cm_membership(pt.X, pt.Y));
    EXPECT_EQ(cm_point_from_json(to_json(pt)).Y, pt.Y);
    EXPECT_THROW(cm_point_from_json(json::parse(R"({"X":[["0"]],"Y":[["1","2"],["3","4"]]})")), Error);
}

TEST(Verify, ReportsAreDeterministic) {
    VerifyConfig cfg;
    cfg.seed = 9;
    cfg.trials = 5;
    auto dump = [&] {
        std::string s;
        for (const auto& r : run_verification_suite({"jacobi", "hom", "cm", "cartan"}, cfg)) s += to_json(r, false).dump();
        return s;
    };
    EXPECT_EQ(dump(), dump());
}

TEST(Verify, OrderIsCanonical) {
    VerifyConfig cfg;
    cfg.trials = 2;
    auto reports = run_verification_suite({"cm", "antisymmetry", "cm"}, cfg);
    ASSERT_EQ(reports.size(), 2u);
    EXPECT_EQ(reports[0].check, "antisymmetry");
    EXPECT_EQ(reports[1].check, "cm");
    EXPECT_THROW(run_verification_suite({"nope"}, cfg), Error);
}

TEST(Verify, SignFlippedOracleIsCaught) {
    VerifyConfig cfg;
    cfg.trials = 20;
    cfg.oracle_sign = -1;
    auto r = run_check("hom", cfg);
    EXPECT_FALSE(r.pass);
    EXPECT_GT(r.failures, 0u);
    ASSERT_TRUE(r.counterexample.contains("f"));
    ASSERT_TRUE(r.counterexample.contains("g"));
    // the counterexample reproduces with the oracle sign flipped
    auto q = one_loop();
    auto f = parse_as<Necklace>(r.counterexample["f"].get<std::string>(), q);
    auto g = parse_as<Necklace>(r.counterexample["g"].get<std::string>(), q);
    VariableLayout layout(q, DimensionVector{{r.counterexample["dims"]["0"].get<std::size_t>()}});
    EXPECT_FALSE(verify_homomorphism(f, g, layout, -1).equal);
    EXPECT_TRUE(verify_homomorphism(f, g, layout).equal);
}

TEST(Verify, ErrorsBecomeFailedEntries) {
    VerifyConfig cfg;
    cfg.trials = 1;
    cfg.dims = "1,2,3";  // wrong length for the default one-loop quiver
    auto r = run_check("hom", cfg);
    EXPECT_FALSE(r.pass);
    EXPECT_TRUE(r.counterexample.contains("error"));
}

TEST(Verify, TimingsOnlyWhenRequested) {
    VerifyConfig cfg;
    cfg.trials = 1;
    auto r = run_check("cm", cfg);
    EXPECT_FALSE(to_json(r, false).contains("elapsed_ms"));
    EXPECT_TRUE(to_json(r, true).contains("elapsed_ms"));
}

TEST(Verify, KernelDimensionsOnTwoLoops) {
    auto q = double_quiver(Quiver({"0"}, {{"x", "0", "0"}, {"y", "0", "0"}}));
    PathCatalog cat(q, 4);
    EXPECT_EQ(detail::hamiltonian_kernel_dimension(cat, 0), 1u);
    for (std::size_t len = 1; len <= 4; ++len) EXPECT_EQ(detail::hamiltonian_kernel_dimension(cat, len), 0u);
}
