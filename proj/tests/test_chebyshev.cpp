#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "knots/polyring/chebyshev.hpp"
#include "support/random_poly.hpp"

using namespace knots;
using namespace knots::polyring;

TEST(Chebyshev, T6MatchesExplicitPolynomial)
{
    MultiPoly x = MultiPoly::variable({"x"}, "x");
    MultiPoly two({"x"}, Rational(2));
    MultiPoly expected = x.pow(6) - Rational(6) * x.pow(4) + Rational(9) * x.pow(2) - two;
    EXPECT_EQ(chebyshev(6), expected);
}

TEST(Chebyshev, RecurrenceBase)
{
    EXPECT_EQ(chebyshev(0), MultiPoly({"x"}, Rational(2)));
    EXPECT_EQ(chebyshev(1), MultiPoly::variable({"x"}, "x"));
}

TEST(Chebyshev, CosineIdentity)
{
    const double a = std::acos(-1.0) / 7;
    auto v = chebyshev(6).evaluate({{2 * std::cos(a), 0}});
    EXPECT_LT(std::abs(v.real() - 2 * std::cos(6 * a)), 1e-12);
}

TEST(Chebyshev, CosineIdentityUpToForty)
{
    // The polynomial is evaluated exactly at the double nearest 2cos(theta),
    // so the only error is the rounding of the argument.
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> theta(0, std::acos(-1.0));
    for (unsigned n = 0; n <= 40; ++n)
    {
        MultiPoly tn = chebyshev(n);
        for (int k = 0; k < 5; ++k)
        {
            double th = theta(rng);
            MultiPoly v = tn.substitute("x", MultiPoly({"x"}, Rational(2 * std::cos(th))));
            EXPECT_LT(std::abs(v.constant_value().get_d() - 2 * std::cos(n * th)), 1e-12) << "n=" << n;
        }
    }
}

TEST(Chebyshev, LaurentIdentityExact)
{
    // T_n(s + 1/s) = s^n + s^-n, checked exactly for n <= 40.
    const VarList vs{"x", "s"};
    MultiPoly s = MultiPoly::variable(vs, "s"), sinv = MultiPoly::variable(vs, "s", -1);
    for (unsigned n = 0; n <= 40; ++n)
    {
        MultiPoly tn = chebyshev(n, vs, "x").substitute("x", s + sinv);
        MultiPoly expected = n == 0 ? MultiPoly(vs, Rational(2))
                                    : MultiPoly::variable(vs, "s", int(n)) + MultiPoly::variable(vs, "s", -int(n));
        EXPECT_EQ(tn, expected) << "n=" << n;
    }
}

TEST(TraceCoordinate, TrefoilRileyRelation)
{
    const VarList st{"s", "t"};
    MultiPoly s = MultiPoly::variable(st, "s"), t = MultiPoly::variable(st, "t");
    MultiPoly in = s.pow(2) + MultiPoly::variable(st, "s", -2) - MultiPoly(st, Rational(1)) - t;
    const VarList xt{"xi", "t"};
    MultiPoly xi = MultiPoly::variable(xt, "xi"), tt = MultiPoly::variable(xt, "t");
    EXPECT_EQ(to_trace_coordinate(in), xi.pow(2) - MultiPoly(xt, Rational(3)) - tt);
}

TEST(TraceCoordinate, LongitudeTraceIsMinusT6)
{
    MultiPoly s = MultiPoly::variable({"s"}, "s");
    MultiPoly in = -(s.pow(6) + MultiPoly::variable({"s"}, "s", -6));
    EXPECT_EQ(to_trace_coordinate(in), -chebyshev(6, "xi"));
}

TEST(TraceCoordinate, ConstantsPassThrough)
{
    EXPECT_EQ(to_trace_coordinate(MultiPoly({"s"}, Rational(5))), MultiPoly({"xi"}, Rational(5)));
}

TEST(TraceCoordinate, AsymmetricInputIsRejected)
{
    MultiPoly s = MultiPoly::variable({"s"}, "s");
    EXPECT_THROW(to_trace_coordinate(s), SymmetryError);
    EXPECT_THROW(to_trace_coordinate(s.pow(2) + MultiPoly::variable({"s"}, "s", -1)), SymmetryError);
    EXPECT_THROW(to_trace_coordinate(MultiPoly::variable({"s"}, "s", -1)), SymmetryError);
}

TEST(TraceCoordinate, RoundTripRecoversInput)
{
    std::mt19937_64 rng(8);
    const VarList st{"s", "t"};
    for (int i = 0; i < 50; ++i)
    {
        // Symmetrize a random Laurent polynomial.
        MultiPoly r = test_support::random_poly(rng, st, 5, -4, 4);
        MultiPoly sym = r + r.substitute("s", MultiPoly::variable(st, "s", -1));
        MultiPoly x = to_trace_coordinate(sym);
        MultiPoly back = x.with_vars({"xi", "t", "s"});
        MultiPoly s = MultiPoly::variable({"xi", "t", "s"}, "s");
        back = back.substitute("xi", s + MultiPoly::variable({"xi", "t", "s"}, "s", -1));
        EXPECT_EQ(back.with_vars({"s", "t"}), sym);
    }
}
