#include "cochar/json_io.hpp"

#include <gtest/gtest.h>

namespace cochar {
namespace {

TEST(JsonIo, RationalStrings) {
    EXPECT_EQ(to_json(BigRational(-5, 3)), nlohmann::json("-5/3"));
    EXPECT_EQ(to_json(BigRational(7)), nlohmann::json("7"));
}

TEST(JsonIo, IntegerWidening) {
    EXPECT_EQ(json_integer(BigInt(42)), nlohmann::json(42));
    const BigInt huge = BigInt("123456789012345678901234567890");
    EXPECT_EQ(json_integer(huge),
              nlohmann::json("123456789012345678901234567890"));
}

TEST(JsonIo, PolyRecordsAreSorted) {
    const VarList tv("t", "v");
    const Poly t = Poly::variable(tv, "t");
    const Poly v = Poly::variable(tv, "v");
    const nlohmann::json j = to_json(t * t - v * BigRational(1, 2) + 3);
    EXPECT_EQ(j["variables"], nlohmann::json({"t", "v"}));
    const auto& terms = j["terms"];
    ASSERT_EQ(terms.size(), 3u);
    // Graded order: constant, then v, then t^2.
    EXPECT_EQ(terms[0]["exponents"], nlohmann::json({0, 0}));
    EXPECT_EQ(terms[0]["coefficient"], "3");
    EXPECT_EQ(terms[1]["exponents"], nlohmann::json({0, 1}));
    EXPECT_EQ(terms[1]["coefficient"], "-1/2");
    EXPECT_EQ(terms[2]["exponents"], nlohmann::json({2, 0}));
}

TEST(JsonIo, SeriesShape) {
    TruncSeries2 s(3);
    s.set_coeff(1, 2, BigRational(5, 4));
    s.set_coeff(0, 0, BigRational(1));
    const nlohmann::json j = to_json(s);
    EXPECT_EQ(j["N"], 3);
    ASSERT_EQ(j["terms"].size(), 2u);
    EXPECT_EQ(j["terms"][0], nlohmann::json({0, 0, "1"}));
    EXPECT_EQ(j["terms"][1], nlohmann::json({1, 2, "5/4"}));
}

TEST(JsonIo, RatFuncAndDecompositions) {
    const VarList vr("v");
    const Poly v = Poly::variable(vr, "v");
    const RatFunc f(Poly::constant(vr, 1), 1 - v * v);
    const nlohmann::json j = to_json(f);
    EXPECT_TRUE(j.contains("numerator"));
    EXPECT_TRUE(j.contains("denominator"));
    const nlohmann::json pv = to_json(partial_fractions_v(f));
    ASSERT_EQ(pv["coefficients"].size(), 2u);
    EXPECT_EQ(pv["coefficients"][0]["coefficient"], "1/2");
}

} // namespace
} // namespace cochar
