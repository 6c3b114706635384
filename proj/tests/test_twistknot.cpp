#include <random>

#include <gtest/gtest.h>

#include "knots/polyring/io.hpp"
#include "knots/twistknot/model.hpp"

using namespace knots;
using namespace knots::twistknot;
using words::norm_inf;

namespace {

MultiPoly sv(int k = 1) { return MultiPoly::variable(st_vars(), "s", k); }
MultiPoly tv(int k = 1) { return MultiPoly::variable(st_vars(), "t", k); }
MultiPoly cst(long v) { return MultiPoly(st_vars(), Rational(v)); }
MultiPoly xi(int k = 1) { return MultiPoly::variable(xit_vars(), "xi", k); }
MultiPoly xt(int k = 1) { return MultiPoly::variable(xit_vars(), "t", k); }
MultiPoly xc(long v) { return MultiPoly(xit_vars(), Rational(v)); }

bool up_to_sign(const MultiPoly& a, const MultiPoly& b) { return a == b || a == -b; }

// Random s away from the unit-modulus special points.
cd random_s(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> mod(0.6, 1.6), arg(0, 6.283185307179586);
    return std::polar(mod(rng), arg(rng));
}

}   // namespace

TEST(Model, RejectsUnknot)
{
    EXPECT_THROW(build_model(0), UnknotError);
}

TEST(Model, GeneratorMatrices)
{
    auto m = build_model(3);
    EXPECT_EQ(m.X, SymbolicMat(sv(), cst(1), cst(0), sv(-1)));
    EXPECT_EQ(m.Y, SymbolicMat(sv(), cst(0), -tv(), sv(-1)));
    EXPECT_EQ(m.X.det(), cst(1));
    EXPECT_EQ(m.Y.det(), cst(1));
}

TEST(Model, LongitudeIsHomologicallyTrivial)
{
    for (int q : {-5, -2, -1, 1, 2, 4})
    {
        auto m = build_model(q);
        EXPECT_EQ(m.lambda_word.exponent_sum("x"), 0);
        EXPECT_EQ(m.lambda_word.exponent_sum("y"), 0);
        EXPECT_EQ(m.relator.exponent_sum("x"), 1);
        EXPECT_EQ(m.relator.exponent_sum("y"), -1);
    }
}

TEST(Model, TrefoilRelatorDefect)
{
    auto m = build_model(1);
    SymbolicMat z = z_power(m);
    SymbolicMat d = z * m.X - m.Y * z;
    MultiPoly phi_raw = cst(-1) + sv(-2) + sv(2) - tv();
    EXPECT_TRUE(d.a11.is_zero());
    EXPECT_TRUE(d.a22.is_zero());
    EXPECT_EQ(d.a12, phi_raw);
    EXPECT_EQ(d.a21, tv() * phi_raw);
}

TEST(Riley, Trefoil)
{
    auto m = build_model(1);
    EXPECT_TRUE(up_to_sign(riley_xi(m), xi(2) - xc(3) - xt()));
    EXPECT_EQ(polyring::to_grouped_string(riley_xi(m), "t"), "t - xi^2 + 3");
    EXPECT_EQ(riley_polynomial(m), tv() - sv(2) - sv(-2) + cst(1));
}

TEST(Riley, FigureEight)
{
    auto m = build_model(-1);
    MultiPoly expected = xt(2) - (xi(2) - xc(5)) * xt() - xi(2) + xc(5);
    EXPECT_EQ(riley_xi(m), expected);
    EXPECT_EQ(polyring::to_grouped_string(riley_xi(m), "t"), "t^2 - (xi^2-5) t - xi^2 + 5");
}

TEST(Riley, LeadingCoefficientIsAMonomial)
{
    for (int q = -5; q <= 5; ++q)
    {
        if (q == 0)
            continue;
        auto phi = riley_polynomial(build_model(q));
        EXPECT_TRUE(phi.leading_coefficient(phi.index_of("t")).is_monomial()) << "q=" << q;
        EXPECT_EQ(phi.degree("t"), q > 0 ? 2 * q - 1 : -2 * q) << "q=" << q;
    }
}

TEST(Riley, TraceOfXY)
{
    auto m = build_model(2);
    EXPECT_EQ(trace_xy(m), xi(2) - xt() - xc(2));
}

TEST(Longitude, TrefoilMatrixAndTrace)
{
    auto m = build_model(1);
    LongitudeData lon = longitude(m);
    EXPECT_TRUE(lon.upper_triangular);
    EXPECT_EQ(lon.eigenvalue, -sv(6));
    EXPECT_EQ(lon.trace_xi, -polyring::chebyshev(6, xit_vars(), "xi"));

    // Substitute the Riley root t = s^2 + s^-2 - 1 into the full matrix.
    MultiPoly troot = sv(2) + sv(-2) - cst(1);
    auto sub = lon.matrix.map([&](const MultiPoly& p) { return p.substitute("t", troot); });
    MultiPoly c2 = -(cst(1) + sv(2) + sv(4)) * (cst(1) + sv(6)) * sv(-5);
    EXPECT_EQ(sub, SymbolicMat(-sv(6), c2, cst(0), -sv(-6)));
}

TEST(Longitude, FigureEightTrace)
{
    LongitudeData lon = longitude(build_model(-1));
    EXPECT_TRUE(lon.upper_triangular);
    EXPECT_EQ(lon.trace_xi, xi(4) - xc(5) * xi(2) + xc(2));
}

TEST(Longitude, CommutesWithMeridianModuloRiley)
{
    for (int q : {-2, -1, 1, 2})
    {
        auto m = build_model(q);
        MultiPoly phi = riley_polynomial(m);
        SymbolicMat l = longitude(m).matrix;
        SymbolicMat comm = m.X * l - l * m.X;
        for (const MultiPoly* e : {&comm.a11, &comm.a12, &comm.a21, &comm.a22})
            EXPECT_TRUE(polyring::reduce_modulo(*e, phi, "t").is_zero()) << "q=" << q;
    }
}

TEST(XiRelation, KnownRelations)
{
    const auto& v = xi_relation_vars();
    MultiPoly l = MultiPoly::variable(v, "xi_l"), mu = MultiPoly::variable(v, "xi_m");
    EXPECT_EQ(xi_relation(build_model(1)), l + polyring::chebyshev(6, v, "xi_m"));
    EXPECT_EQ(xi_relation(build_model(-1)), l - (mu.pow(4) - Rational(5) * mu.pow(2) + MultiPoly(v, Rational(2))));
}

TEST(XiRelation, VanishesOnNumericCharacters)
{
    // Oracle: numeric longitude traces at solved Riley points.
    std::mt19937_64 rng(31);
    for (int q : {-3, -2, 2, 3})
    {
        auto m = build_model(q);
        auto rel = xi_relation_full(m);
        EXPECT_FALSE(rel.fallback_used);
        EXPECT_GT(rel.relation.degree("xi_l"), 0);
        MultiPoly phi = riley_polynomial(m);
        for (int i = 0; i < 5; ++i)
        {
            cd s = random_s(rng);
            for (cd t : riley_t_roots(phi, s))
            {
                cd trl = longitude_numeric(m, numeric_generators(s, t)).trace();
                std::vector<cd> pt{trl, s + 1.0 / s};
                double scale = rel.relation.magnitude<double>(pt);
                EXPECT_LT(std::abs(rel.relation.evaluate<double>(pt)), 1e-8 * scale) << "q=" << q;
            }
        }
    }
}

TEST(Numeric, RepresentationPropertyOnAndOffCurve)
{
    std::mt19937_64 rng(2024);
    for (int q : {-2, -1, 1, 2})
    {
        auto m = build_model(q);
        MultiPoly phi = riley_polynomial(m);
        GroupWord zq = m.z_word.pow(q);
        int checked = 0;
        while (checked < 50)
        {
            cd s = random_s(rng);
            auto roots = riley_t_roots(phi, s);
            for (cd t : roots)
            {
                auto a = numeric_generators(s, t);
                NumericMat z = words::evaluate_word(zq, a);
                EXPECT_LT(norm_inf(z * a.at("x") - a.at("y") * z), 1e-8) << "q=" << q;
                NumericMat l = longitude_numeric(m, a);
                EXPECT_LT(norm_inf(a.at("x") * l - l * a.at("x")), 1e-8);
                EXPECT_LT(norm_inf(words::evaluate_word(m.relator, a) - NumericMat(1, 0, 0, 1)), 1e-8);
                ++checked;

                // Off the curve the defect is macroscopic.
                auto off = numeric_generators(s, t + 0.5);
                NumericMat zo = words::evaluate_word(zq, off);
                EXPECT_GT(norm_inf(zo * off.at("x") - off.at("y") * zo), 1e-3);
            }
        }
    }
}

TEST(Numeric, FoxJacobianIsInvertibleOnTrefoilCharacter)
{
    auto m = build_model(1);
    cd s = std::polar(1.0, 0.3);
    cd t = s * s + 1.0 / (s * s) - 1.0;
    auto a = numeric_generators(s, t);
    NumericMat d = words::evaluate_group_ring(words::fox_derivative(m.relator, "y"), a);
    EXPECT_GT(std::abs(d.det()), 1e-6);
}
