#include <gtest/gtest.h>

#include "weylcheb/io.hpp"

using namespace weylcheb;
using nlohmann::json;

TEST(ExpSumJson, SchemaAndOrder) {
    const ExpSum c = exp_sum(Weight(Rank(2), {1, 0}), OrbitKind::C);
    const json j = to_json(c);
    EXPECT_EQ(j["rank"], 2);
    ASSERT_EQ(j["terms"].size(), 3u);
    EXPECT_EQ(j["terms"][0]["weight"], json({1, 0}));
    EXPECT_EQ(j["terms"][0]["coeff"], 1);
    EXPECT_EQ(j["terms"][2]["weight"], json({0, -1}));
}

TEST(ExpSumJson, RoundTrip) {
    const ExpSum s = multiply(exp_sum(Weight(Rank(3), {1, 2, 1}), OrbitKind::S), exp_sum(Weight(Rank(3), {0, 1, 1}), OrbitKind::C));
    EXPECT_EQ(exp_sum_from_json(json::parse(to_json(s).dump())), s);
}

TEST(ExpSumJson, BigCoefficientsAreStrings) {
    ExpSum s{Rank(1)};
    const BigInt big("123456789012345678901234567890");
    s.add_term({3}, big);
    s.add_term({1}, -7);
    const json j = to_json(s);
    EXPECT_TRUE(j["terms"][0]["coeff"].is_string());
    EXPECT_TRUE(j["terms"][1]["coeff"].is_number_integer());
    EXPECT_EQ(exp_sum_from_json(j), s);
}

TEST(ExpSumJson, RejectsMalformed) {
    EXPECT_THROW(exp_sum_from_json(json::parse(R"({"terms": []})")), PreconditionError);
    EXPECT_THROW(exp_sum_from_json(json::parse(R"({"rank": 2, "terms": [{"weight": [1], "coeff": 1}]})")),
                 PreconditionError);
    EXPECT_THROW(exp_sum_from_json(json::parse(R"({"rank": 1, "terms": [{"weight": [1], "coeff": "x"}]})")),
                 PreconditionError);
    EXPECT_THROW(exp_sum_from_json(json::parse(R"({"rank": 1, "terms": [{"weight": [0.5], "coeff": 1}]})")),
                 PreconditionError);
}

TEST(DecompositionJson, RoundTripAndValidation) {
    const auto d = decompose_into_C(multiply(exp_sum(Weight(Rank(2), {1, 0}), OrbitKind::C),
                                             exp_sum(Weight(Rank(2), {1, 0}), OrbitKind::C)));
    const json j = to_json(d);
    EXPECT_EQ(j["terms"][0]["weight"], json({2, 0}));
    EXPECT_EQ(j["terms"][1]["coeff"], 2);
    EXPECT_EQ(decomposition_from_json(j), d);
    EXPECT_THROW(decomposition_from_json(json::parse(R"({"rank": 1, "terms": [{"weight": [-1], "coeff": 1}]})")),
                 PreconditionError);
}

TEST(PolynomialJson, Schema) {
    const Weight lam(Rank(1), {4});
    const json j = to_json(poly_T(lam), lam, PolyKind::T);
    EXPECT_EQ(j["algebra"], "A1");
    EXPECT_EQ(j["kind"], "T");
    EXPECT_EQ(j["lambda"], json({4}));
    ASSERT_EQ(j["terms"].size(), 3u);
    EXPECT_EQ(j["terms"][0]["deg"], json({4}));
    EXPECT_EQ(j["terms"][1]["coeff"], -4);
    EXPECT_EQ(j["terms"][2]["coeff"], 2);

    const Weight mu(Rank(2), {2, 1});
    const json p = to_json(substitute_P(mu, OrbitKind::S), mu, PolyKind::PS);
    EXPECT_EQ(p["kind"], "PS");
    EXPECT_EQ(p["terms"][0]["deg"], json({2, 1}));
    EXPECT_EQ(p["terms"].size(), 6u);
}

TEST(PolynomialCsv, OneTermPerRow) {
    const Weight lam(Rank(1), {4});
    EXPECT_EQ(to_csv(poly_T(lam)), "deg_1,coeff\n4,1\n2,-4\n0,2\n");
    EXPECT_EQ(to_csv(poly_U(Weight(Rank(2), {1, 1}))), "deg_1,deg_2,coeff\n1,1,1\n0,0,-1\n");
}

TEST(PolyKindNames, RoundTrip) {
    for (PolyKind k : {PolyKind::T, PolyKind::U, PolyKind::PC, PolyKind::PS, PolyKind::PE}) {
        EXPECT_EQ(poly_kind_from_string(to_string(k)), k);
    }
    EXPECT_THROW(poly_kind_from_string("Q"), PreconditionError);
}

TEST(ReportJson, CarriesSeed) {
    const auto rep = symmetry_suite(Weight(Rank(2), {1, 1}), 5, 42);
    const json j = to_json(rep);
    EXPECT_EQ(j["seed"], 42);
    EXPECT_EQ(j["passed"], true);
}
