#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "knots/polyring/chebyshev.hpp"
#include "knots/polyring/roots.hpp"

using namespace knots;
using namespace knots::polyring;

namespace {

MultiPoly xvar() { return MultiPoly::variable({"x"}, "x"); }
MultiPoly cst(long v) { return MultiPoly({"x"}, Rational(v)); }

// Every expected value must be matched by a distinct computed root.
void expect_root_set(const std::vector<ComplexRoot>& got, std::vector<std::complex<double>> expected, double tol)
{
    ASSERT_EQ(got.size(), expected.size());
    std::vector<bool> used(got.size(), false);
    for (const auto& e : expected)
    {
        bool found = false;
        for (std::size_t i = 0; i < got.size(); ++i)
        {
            if (!used[i] && std::abs(got[i].value - e) <= tol)
            {
                used[i] = true;
                found = true;
                break;
            }
        }
        EXPECT_TRUE(found) << "missing root " << e;
    }
}

}   // namespace

TEST(Roots, QuadraticUnits)
{
    auto r = solve_roots(xvar().pow(2) + cst(1));
    expect_root_set(r, {{0, 1}, {0, -1}}, 1e-12);
    for (const auto& z : r)
        EXPECT_LE(z.residual, 1e-9);
}

TEST(Roots, ComplexCoefficientInterface)
{
    std::vector<std::complex<double>> c{{-2, 0}, {0, 0}, {1, 0}};
    auto r = solve_roots(c);
    expect_root_set(r, {{std::sqrt(2.0), 0}, {-std::sqrt(2.0), 0}}, 1e-12);
}

TEST(Roots, NestedChebyshevRootsAreCosines)
{
    // xi + T6(T6(xi)) = 0 has the 36 roots 2cos(k pi/35), k odd, and
    // 2cos(k pi/37), k odd; independent closed form from xi = s + 1/s with
    // s^36 = -s^{-1} or s^36 = -s (s^35 = -1 or s^37 = -1).
    MultiPoly x = xvar();
    MultiPoly t6 = chebyshev(6);
    MultiPoly p = x + t6.substitute("x", t6);
    ASSERT_EQ(p.degree(0), 36);
    std::vector<std::complex<double>> expected;
    for (int k = 1; k < 35; k += 2)
        expected.emplace_back(2 * std::cos(k * std::numbers::pi / 35), 0);
    for (int k = 1; k < 37; k += 2)
        expected.emplace_back(2 * std::cos(k * std::numbers::pi / 37), 0);
    expected.emplace_back(-2, 0);   // k = 35 in the first family
    // k = 35 gives s = -1, xi = -2, which solves the second family at k = 37 too;
    // it appears once since the polynomial has degree 36 = 17 + 18 + 1.
    auto roots = solve_roots(p);
    int total = 0;
    for (const auto& z : roots)
        total += z.multiplicity_hint;
    EXPECT_EQ(total, 36);
    expect_root_set(roots, expected, 1e-9);
}

TEST(Roots, MultiplicitiesSumToDegree)
{
    MultiPoly x = xvar();
    MultiPoly p = (x - cst(1)).pow(3) * (x + cst(2)).pow(2) * (x * x + cst(3));
    auto r = solve_roots(p);
    int total = 0;
    for (const auto& z : r)
    {
        total += z.multiplicity_hint;
        if (std::abs(z.value - std::complex<double>(1, 0)) < 1e-9)
        {
            EXPECT_EQ(z.multiplicity_hint, 3);
        }
        if (std::abs(z.value - std::complex<double>(-2, 0)) < 1e-9)
        {
            EXPECT_EQ(z.multiplicity_hint, 2);
        }
    }
    EXPECT_EQ(total, 7);
    EXPECT_EQ(r.size(), 4u);
}

TEST(Roots, ZeroRootsFromLowOrderTerms)
{
    MultiPoly x = xvar();
    auto r = solve_roots(x.pow(3) * (x - cst(4)));
    int zero_mult = 0;
    for (const auto& z : r)
        if (std::abs(z.value) < 1e-12)
            zero_mult = z.multiplicity_hint;
    EXPECT_EQ(zero_mult, 3);
}

TEST(Roots, DegenerateInputs)
{
    EXPECT_THROW(solve_roots(MultiPoly({"x"})), DegenerateInput);
    EXPECT_THROW(solve_roots(cst(3)), DegenerateInput);
    EXPECT_THROW(solve_roots(MultiPoly::variable({"x", "y"}, "x")), AlignmentError);
}

TEST(Roots, DeterministicForFixedSeed)
{
    MultiPoly x = xvar();
    MultiPoly p = x.pow(9) - Rational(3) * x.pow(4) + cst(1);
    auto a = solve_roots(p), b = solve_roots(p);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        EXPECT_EQ(a[i].value, b[i].value);
}
