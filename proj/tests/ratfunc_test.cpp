#include "cochar/ratfunc.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cochar/series.hpp"

namespace cochar {
namespace {

const VarList kTV("t", "v");
const VarList kXY("x", "y");

Poly T() { return Poly::variable(kTV, "t"); }
Poly V() { return Poly::variable(kTV, "v"); }
Poly X() { return Poly::variable(kXY, "x"); }
Poly Y() { return Poly::variable(kXY, "y"); }

RatFunc rf(Poly num, Poly den) { return RatFunc(std::move(num), std::move(den)); }

RatFunc random_ratfunc(std::mt19937& rng) {
    std::uniform_int_distribution<int> e(0, 3);
    std::uniform_int_distribution<int> coeff(-5, 5);
    const auto poly = [&](bool nonzero_const) {
        Poly p(kTV);
        for (int i = 0; i < 4; ++i) {
            p.add_term({e(rng), e(rng)}, coeff(rng));
        }
        if (nonzero_const) {
            p.add_term({0, 0}, 1 - p.coeff({0, 0}));
        }
        return p;
    };
    return RatFunc(poly(false), poly(true));
}

TEST(RatFunc, NormalizeReducesDifferenceOfSquares) {
    const RatFunc f = rf(T() * T() - V() * V(), T() - V());
    EXPECT_EQ(f.num(), T() + V());
    EXPECT_EQ(f.den(), Poly::constant(kTV, 1));
}

TEST(RatFunc, NormalizeMovesContentIntoNumerator) {
    const RatFunc f = rf(2 * T(), Poly::constant(kTV, 4));
    EXPECT_EQ(f.num(), T() * BigRational(1, 2));
    EXPECT_EQ(f.den(), Poly::constant(kTV, 1));
}

TEST(RatFunc, NormalizeIsIdempotent) {
    std::mt19937 rng(42);
    for (int i = 0; i < 100; ++i) {
        const RatFunc f = random_ratfunc(rng);
        const RatFunc again(f.num(), f.den());
        EXPECT_EQ(again.num(), f.num());
        EXPECT_EQ(again.den(), f.den());
    }
}

TEST(RatFunc, DenominatorSignNormalization) {
    const RatFunc f = rf(Poly::constant(kTV, 1), V() - 1);
    EXPECT_EQ(f.den(), 1 - V());  // least term made positive
    EXPECT_EQ(f.num(), Poly::constant(kTV, -1));
}

TEST(RatFunc, ZeroDenominatorThrows) {
    EXPECT_THROW(rf(T(), Poly(kTV)), DomainError);
}

TEST(RatFunc, ArithmeticFieldProperties) {
    std::mt19937 rng(7);
    for (int i = 0; i < 60; ++i) {
        const RatFunc f = random_ratfunc(rng);
        const RatFunc g = random_ratfunc(rng);
        EXPECT_EQ(f + g - g, f);
        if (!g.is_zero()) {
            EXPECT_EQ(f * g / g, f);
        }
    }
}

TEST(RatFunc, EqualityByCrossMultiplication) {
    const RatFunc a = rf(T(), 1 - V());
    const RatFunc b = rf(T() * (1 + V()), (1 - V()) * (1 + V()));
    EXPECT_EQ(a, b);
    EXPECT_NE(a, a + RatFunc::constant(kTV, 1));
}

TEST(RatFunc, PromotionAcrossVariableLists) {
    const VarList vv("v");
    const RatFunc a(Poly::variable(vv, "v"));
    const RatFunc sum = a + rf(T(), Poly::constant(kTV, 1));
    EXPECT_EQ(sum, RatFunc(T() + V()));
    EXPECT_THROW(
        a + RatFunc::variable(kXY, "x"),
        UsageError);
}

TEST(Substitute, RenamesVariable) {
    const VarList vv("v");
    const RatFunc f = rf(Poly::constant(kTV, 1), 1 - T());
    const RatFunc g = substitute(f, {{"t", RatFunc::variable(vv, "v")}});
    const Poly v1 = Poly::variable(vv, "v");
    EXPECT_EQ(g, RatFunc(Poly::constant(vv, 1), 1 - v1));
}

TEST(Substitute, ComposesMonomialBindings) {
    // 1/((1-t^2)(1-v^2)) with t -> x, v -> xy.
    const RatFunc f =
        rf(Poly::constant(kTV, 1), (1 - T() * T()) * (1 - V() * V()));
    const RatFunc g = substitute(f, {{"t", RatFunc(X())},
                                     {"v", RatFunc(X() * Y())}});
    const RatFunc expect =
        rf(Poly::constant(kXY, 1),
           (1 - X() * X()) * (1 - X() * X() * Y() * Y()));
    EXPECT_EQ(g, expect);
}

TEST(Substitute, DiagonalValueOfFirstTwistedForm) {
    // h = (1 + v^2 t) / ((1-v^2)^2 (1+v^2) (1-t^2) (1-vt)) at t = v
    // reduces to (v^2-v+1) / ((1-v)^4 (1+v)^3 (1+v^2)).
    const RatFunc h = rf(1 + V() * V() * T(),
                         (1 - V() * V()).pow(2) * (1 + V() * V()) *
                             (1 - T() * T()) * (1 - V() * T()));
    const RatFunc g = substitute(h, {{"t", RatFunc::variable(kTV, "v")}});
    const RatFunc expect = rf(V() * V() - V() + 1,
                              (1 - V()).pow(4) * (1 + V()).pow(3) *
                                  (1 + V() * V()));
    EXPECT_EQ(g, expect);
    // Cross-check through total degree 20 of the series expansions.
    EXPECT_EQ(expand(g, 20).terms(), expand(expect, 20).terms());
}

TEST(Substitute, RoundTripThroughFreshVariable) {
    std::mt19937 rng(11);
    const VarList sv("s", "v");
    for (int i = 0; i < 40; ++i) {
        const RatFunc f = random_ratfunc(rng);
        const RatFunc to_s = substitute(
            f, {{"t", RatFunc::variable(sv, "s")}});
        const RatFunc back = substitute(
            to_s, {{"s", RatFunc::variable(kTV, "t")}});
        EXPECT_EQ(back, f);
    }
}

TEST(Substitute, DenominatorCollapseThrows) {
    const RatFunc f = rf(Poly::constant(kTV, 1), T() - V() * V());
    EXPECT_THROW(
        substitute(f, {{"t", RatFunc(V() * V())}}),
        DomainError);
}

TEST(Substitute, UnknownBindingThrows) {
    const RatFunc f = rf(T(), 1 - T());
    EXPECT_THROW(substitute(f, {{"q", RatFunc(X())}}), UsageError);
}

TEST(EvalRational, PolesAndValues) {
    const VarList vv("v");
    const Poly v = Poly::variable(vv, "v");
    const RatFunc f(Poly::constant(vv, 1), 1 - v);
    EXPECT_EQ(eval_rational(f, BigRational(1, 2)), BigRational(2));
    EXPECT_THROW(eval_rational(f, BigRational(1)), DomainError);
}

} // namespace
} // namespace cochar
