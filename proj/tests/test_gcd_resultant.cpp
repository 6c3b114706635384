#include <random>

#include <gtest/gtest.h>

#include "knots/polyring/algorithms.hpp"
#include "knots/polyring/io.hpp"
#include "support/random_poly.hpp"

using namespace knots;
using namespace knots::polyring;

namespace {

const VarList LM{"L", "M"};

MultiPoly L(int k = 1) { return MultiPoly::variable(LM, "L", k); }
MultiPoly M(int k = 1) { return MultiPoly::variable(LM, "M", k); }
MultiPoly one() { return MultiPoly(LM, Rational(1)); }

bool equal_up_to_sign(const MultiPoly& a, const MultiPoly& b) { return a == b || a == -b; }

}   // namespace

TEST(Gcd, KnownAPolynomialFactorsAreCoprime)
{
    // Oracle: both inputs are given as products of irreducible factors; the
    // factor sets {L-1, LM^6+1} and {M-1, ML^6+1} share no associate, so the
    // gcd must be 1.
    std::vector<MultiPoly> left{L() - one(), L() * M(6) + one()};
    std::vector<MultiPoly> right{M() - one(), M() * L(6) + one()};
    for (const auto& f : left)
        for (const auto& g : right)
            ASSERT_FALSE(equal_up_to_sign(primitive_integer(f), primitive_integer(g)));
    MultiPoly a = left[0] * left[1];
    MultiPoly b = right[0] * right[1];
    EXPECT_EQ(gcd(a, b), one());
}

TEST(Gcd, SelfGcdIsPrimitivePart)
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 40; ++i)
    {
        MultiPoly p = test_support::random_nonconstant(rng, LM, 5, 4) * Rational(6);
        EXPECT_TRUE(equal_up_to_sign(gcd(p, p), primitive_integer(p)));
    }
}

TEST(Gcd, PlantedCommonFactorIsRecovered)
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 60; ++i)
    {
        // f is linear in L and g is linear in M, both with unit content, so
        // both are irreducible; the M^2 term keeps them from being associates.
        MultiPoly f = L() + M(2) + test_support::random_poly(rng, {"M"}, 2, 0, 1).with_vars(LM);
        MultiPoly g = M() + test_support::random_poly(rng, {"L"}, 3, 0, 2).with_vars(LM);
        MultiPoly h = test_support::random_nonconstant(rng, LM, 4, 3);
        MultiPoly got = gcd(f * h, g * h);
        EXPECT_TRUE(equal_up_to_sign(got, primitive_integer(h)))
            << "f=" << to_string(f) << " g=" << to_string(g) << " h=" << to_string(h) << " got=" << to_string(got);
    }
}

TEST(Gcd, DividesBothInputs)
{
    std::mt19937_64 rng(99);
    const VarList xyz{"x", "y", "z"};
    for (int i = 0; i < 60; ++i)
    {
        MultiPoly h = test_support::random_nonconstant(rng, xyz, 3, 2);
        MultiPoly a = test_support::random_poly(rng, xyz, 3, 0, 2) * h;
        MultiPoly b = test_support::random_poly(rng, xyz, 3, 0, 2) * h;
        MultiPoly g = gcd(a, b);
        EXPECT_TRUE(divides(g, a));
        EXPECT_TRUE(divides(g, b));
        EXPECT_TRUE(divides(h, g));
    }
}

TEST(Gcd, MonomialFactorsOfPolynomialsAreKept)
{
    EXPECT_EQ(gcd(L(2) * M(), L() * M(3)), L() * M());
    // Laurent inputs treat monomials as units.
    EXPECT_EQ(gcd(L(-1) * (M() + one()), M() + one()), M() + one());
}

TEST(Gcd, LaurentInputIsNormalized)
{
    MultiPoly a = (M() + one()) * L(-2);
    MultiPoly b = (M() + one()) * (L() - one()) * M(-3);
    EXPECT_EQ(gcd(a, b), M() + one());
}

TEST(Resultant, LinearCase)
{
    const VarList tab{"t", "a", "b"};
    MultiPoly t = MultiPoly::variable(tab, "t"), a = MultiPoly::variable(tab, "a"), b = MultiPoly::variable(tab, "b");
    EXPECT_EQ(resultant(t - a, t - b, "t"), a - b);
}

TEST(Resultant, QuadraticAgainstLinear)
{
    const VarList ts{"t", "s"};
    MultiPoly t = MultiPoly::variable(ts, "t"), s = MultiPoly::variable(ts, "s");
    MultiPoly c1(ts, Rational(1));
    EXPECT_EQ(resultant(t.pow(2) - s, t + c1, "t"), c1 - s);
}

TEST(Resultant, DegreeZeroIsAnEliminationError)
{
    EXPECT_THROW(resultant(L() + one(), M(), "L"), EliminationError);
}

TEST(Resultant, VanishesExactlyWithACommonFactor)
{
    std::mt19937_64 rng(17);
    const VarList xy{"x", "y"};
    int planted = 0, clean = 0;
    for (int i = 0; i < 80; ++i)
    {
        MultiPoly a = test_support::random_nonconstant(rng, xy, 3, 2);
        MultiPoly b = test_support::random_nonconstant(rng, xy, 3, 2);
        if (i % 2 == 0)
        {
            MultiPoly h = test_support::random_nonconstant(rng, xy, 3, 2);
            a *= h;
            b *= h;
        }
        if (a.degree("x") == 0 || b.degree("x") == 0)
            continue;
        MultiPoly r = resultant(a, b, "x");
        MultiPoly g = gcd(a, b);
        EXPECT_EQ(r.is_zero(), g.degree("x") > 0) << to_string(a) << " | " << to_string(b);
        (g.degree("x") > 0 ? planted : clean)++;
    }
    EXPECT_GT(planted, 10);
    EXPECT_GT(clean, 10);
}

TEST(Squarefree, RemovesRepeatedFactors)
{
    MultiPoly f = L() - one(), g = L() * M() + one(), h = M() + Rational(2) * one();
    MultiPoly p = f.pow(3) * g.pow(2) * h;
    EXPECT_EQ(squarefree_part(p), primitive_integer(f * g * h));
}

TEST(Squarefree, YunDecomposition)
{
    MultiPoly x = MultiPoly::variable({"x"}, "x");
    MultiPoly c1({"x"}, Rational(1));
    MultiPoly p = (x - c1) * (x + c1).pow(2) * (x * x + c1).pow(3) * Rational(5);
    auto dec = squarefree_decomposition(p);
    ASSERT_EQ(dec.size(), 3u);
    EXPECT_EQ(dec[0].first, x - c1);
    EXPECT_EQ(dec[0].second, 1);
    EXPECT_EQ(dec[1].first, x + c1);
    EXPECT_EQ(dec[1].second, 2);
    EXPECT_EQ(dec[2].first, x * x + c1);
    EXPECT_EQ(dec[2].second, 3);
}

TEST(ReduceModulo, MonomialLeadingCoefficient)
{
    const VarList st{"s", "t"};
    MultiPoly s = MultiPoly::variable(st, "s"), t = MultiPoly::variable(st, "t");
    MultiPoly c1(st, Rational(1));
    // Trefoil Riley relation: -1 + s^-2 + s^2 - t.
    MultiPoly phi = -c1 + s.pow(2) + MultiPoly::variable(st, "s", -2) - t;
    MultiPoly p = t.pow(2) * s + t;
    MultiPoly r = reduce_modulo(p, phi, "t");
    EXPECT_EQ(r.degree("t"), 0);
    MultiPoly tval = s.pow(2) + MultiPoly::variable(st, "s", -2) - c1;
    EXPECT_EQ(r, p.substitute("t", tval));
    EXPECT_THROW(reduce_modulo(p, t * (s + c1) + c1, "t"), DegenerateInput);
}
