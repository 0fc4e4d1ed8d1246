#include "cochar/poly.hpp"

#include <gtest/gtest.h>

#include <random>

namespace cochar {
namespace {

const VarList kTV("t", "v");

Poly T() { return Poly::variable(kTV, "t"); }
Poly V() { return Poly::variable(kTV, "v"); }

Poly random_poly(std::mt19937& rng, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> e(0, max_deg);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    Poly p(kTV);
    std::uniform_int_distribution<int> nterms(0, max_terms);
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        p.add_term({e(rng), e(rng)}, BigRational(num(rng), den(rng)));
    }
    return p;
}

TEST(Poly, TermOrderIsGradedThenFirstVariable) {
    Poly p = T() + V() + T() * T() + Poly::constant(kTV, 5);
    // least: constant, then v (t-degree 0), then t, then t^2.
    EXPECT_EQ(p.least_term().first, (Exponents{0, 0}));
    EXPECT_EQ(p.leading_term().first, (Exponents{2, 0}));
    const Poly q = T() - V();
    EXPECT_EQ(q.least_term().second, BigRational(-1));  // -v comes first
}

TEST(Poly, ArithmeticBasics) {
    const Poly a = (1 - V()) * (1 + V());
    Poly expect(kTV);
    expect.add_term({0, 0}, 1);
    expect.add_term({0, 2}, -1);
    EXPECT_EQ(a, expect);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ((T() * 2 + 1) * (T() * 2 - 1), 4 * T() * T() - 1);
}

TEST(Poly, PowAndEval) {
    const Poly p = (1 + T()).pow(5);
    EXPECT_EQ(p.coeff({3, 0}), BigRational(10));
    EXPECT_EQ(p.eval({BigRational(1), BigRational(0)}), BigRational(32));
    const Poly q = T() * T() * V() - 3;
    EXPECT_EQ(q.eval({BigRational(2), BigRational(1, 2)}), BigRational(-1));
}

TEST(Poly, DivExactSucceedsOnMultiples) {
    const Poly f = (T() - V()) * (T() + V());
    const auto q = div_exact(f, T() - V());
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, T() + V());
}

TEST(Poly, DivExactRejectsNonMultiples) {
    EXPECT_FALSE(div_exact(T() * T() + 1, T() - V()).has_value());
    EXPECT_FALSE(div_exact(T() + 1, T() * T()).has_value());
}

TEST(Poly, DivExactRandomizedRoundTrip) {
    std::mt19937 rng(12345);
    for (int i = 0; i < 200; ++i) {
        const Poly a = random_poly(rng, 4, 5);
        const Poly b = random_poly(rng, 4, 5);
        if (b.is_zero()) {
            continue;
        }
        const auto q = div_exact(a * b, b);
        ASSERT_TRUE(q.has_value());
        EXPECT_EQ(*q, a);
    }
}

TEST(Poly, GcdOfDifferenceOfSquares) {
    const Poly f = T() * T() - V() * V();
    const Poly g = T() - V();
    // Unit normalization flips the sign so the least term is positive.
    EXPECT_EQ(gcd(f, g), V() - T());
}

TEST(Poly, GcdWithContents) {
    const Poly f = (1 - V()) * T();
    const Poly g = (1 - V()) * V();
    EXPECT_EQ(gcd(f, g), 1 - V());
    const Poly a = (1 - V()).pow(3) * (1 + T());
    const Poly b = (1 - V()).pow(2) * (1 - T());
    EXPECT_EQ(gcd(a, b), (1 - V()).pow(2));
}

TEST(Poly, GcdRandomizedDividesBoth) {
    std::mt19937 rng(999);
    for (int i = 0; i < 80; ++i) {
        const Poly a = random_poly(rng, 3, 4);
        const Poly b = random_poly(rng, 3, 4);
        const Poly c = random_poly(rng, 2, 3);
        if (a.is_zero() || b.is_zero() || c.is_zero()) {
            continue;
        }
        const Poly g = gcd(a * c, b * c);
        EXPECT_TRUE(divides(g, a * c));
        EXPECT_TRUE(divides(g, b * c));
        EXPECT_TRUE(divides(c, g) || g.total_degree() >= c.total_degree());
    }
}

TEST(Poly, ContentAndPrimitive) {
    const Poly p = T() * BigRational(4, 3) + Poly::constant(kTV, BigRational(2, 3));
    EXPECT_EQ(rat_content(p), BigRational(2, 3));
    EXPECT_EQ(z_primitive(p), 2 * T() + 1);
}

TEST(Poly, ToStringReadsLikeAFormula) {
    EXPECT_EQ(to_string(1 - 2 * T() + T() * T() * V()), "t^2*v - 2*t + 1");
    EXPECT_EQ(to_string(Poly(kTV)), "0");
}

TEST(Poly, MixedRingOperationsThrow) {
    const VarList xy("x", "y");
    EXPECT_THROW(T() + Poly::variable(xy, "x"), UsageError);
    EXPECT_THROW(gcd(T(), Poly::variable(xy, "x")), UsageError);
}

} // namespace
} // namespace cochar
