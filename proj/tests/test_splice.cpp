#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "knots/polyring/chebyshev.hpp"
#include "knots/polyring/io.hpp"
#include "knots/splice/bending.hpp"
#include "knots/splice/characters.hpp"
#include "knots/splice/system.hpp"
#include "knots/splice/torsion.hpp"
#include "knots/splice/torus.hpp"
#include "knots/verify/chain_complex.hpp"

using namespace knots;
using namespace knots::splice;
using polyring::MultiPoly;

namespace {

MultiPoly xi_poly(std::initializer_list<std::pair<int, long>> terms)
{
    MultiPoly p({"xi"});
    for (auto [e, c] : terms)
        p.add_term({e}, polyring::Rational(c));
    return p;
}

std::vector<double> cos_family(int denominator, int max_k)
{
    std::vector<double> out;
    for (int k = 1; k <= max_k; k += 2)
        out.push_back(2 * std::cos(k * std::numbers::pi / denominator));
    return out;
}

// Each expected value is matched by exactly one distinct xi in the list.
bool same_real_set(std::vector<double> expected, std::vector<cd> got, double tol)
{
    if (expected.size() != got.size())
        return false;
    std::vector<bool> used(got.size(), false);
    for (double e : expected)
    {
        bool found = false;
        for (std::size_t i = 0; i < got.size() && !found; ++i)
            if (!used[i] && std::abs(got[i] - cd(e, 0)) <= tol)
                used[i] = found = true;
        if (!found)
            return false;
    }
    return true;
}

const CharacterInventory& trefoil_inventory()
{
    static const CharacterInventory inv = solve_characters(splice_equation(1, 1));
    return inv;
}

}   // namespace

TEST(SpliceEquation, TrefoilIsNestedChebyshev)
{
    SpliceSystem sys = splice_equation(1, 1);
    MultiPoly xi = MultiPoly::variable({"xi"}, "xi");
    MultiPoly t6 = polyring::chebyshev(6, "xi");
    EXPECT_EQ(sys.xi_equation, xi + t6.substitute("xi", t6));
    EXPECT_EQ(sys.xi_equation.degree(0), 36);
}

TEST(SpliceEquation, FigureEightExactCoefficients)
{
    SpliceSystem sys = splice_equation(-1, -1);
    MultiPoly expected = xi_poly({{16, 1}, {14, -20}, {12, 158}, {10, -620}, {8, 1244}, {6, -1190}, {4, 487},
                                  {2, -60}, {1, -1}, {0, -2}});
    EXPECT_EQ(sys.xi_equation, expected);
    auto roots = polyring::solve_roots(sys.xi_equation);
    EXPECT_EQ(roots.size(), 16u);
    bool has_minus_two = false;
    for (const auto& r : roots)
        has_minus_two = has_minus_two || std::abs(r.value + 2.0) <= 1e-9;
    EXPECT_TRUE(has_minus_two);
}

TEST(SpliceEquation, SwappingTheKnotsSwapsTheEquations)
{
    for (auto [a, b] : {std::pair{1, -1}, std::pair{1, 2}, std::pair{-1, 2}})
    {
        SpliceSystem ab = splice_equation(a, b), ba = splice_equation(b, a);
        EXPECT_EQ(ab.xi_equation, ba.xi2_equation) << a << "," << b;
        EXPECT_EQ(ab.xi2_equation, ba.xi_equation) << a << "," << b;
    }
}

TEST(SpliceEquation, RejectsUnknot)
{
    EXPECT_THROW(splice_equation(0, 1), UnknotError);
}

TEST(Characters, TrefoilMirrorSeparation)
{
    const auto& inv = trefoil_inventory();
    std::vector<cd> genuine, mirror;
    for (const auto& c : inv.characters)
    {
        EXPECT_LE(c.residual(), 1e-8);
        EXPECT_GT(std::abs(c.t1), 1e-9);
        EXPECT_GT(std::abs(c.t2), 1e-9);
        (c.mirror() ? mirror : genuine).push_back(c.xi1);
    }
    EXPECT_TRUE(same_real_set(cos_family(35, 33), genuine, 1e-9));
    EXPECT_TRUE(same_real_set(cos_family(37, 35), mirror, 1e-9));
    ASSERT_EQ(inv.spurious.size(), 1u);
    EXPECT_LT(std::abs(inv.spurious[0].xi + 2.0), 1e-9);
}

TEST(Characters, TrefoilTorsionIsTwoOnEachSide)
{
    for (const auto& c : trefoil_inventory().characters)
    {
        if (c.mirror() || !c.acyclic_on_torus)
            continue;
        EXPECT_LT(std::abs(c.torsion_1 - 2.0), 1e-7);
        EXPECT_LT(std::abs(c.torsion_2 - 2.0), 1e-7);
    }
    RTReport rep = rt_set(1, 1);
    ASSERT_EQ(rep.rt_set.size(), 1u);
    EXPECT_EQ(rep.rt_set[0], cd(4, 0));
    EXPECT_TRUE(rep.criterion.coprime());
}

TEST(Characters, AcyclicityAgreesWithParabolicTest)
{
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, -1}, std::pair{-1, -1}})
    {
        auto inv = solve_characters(splice_equation(a, b));
        EXPECT_FALSE(inv.characters.empty());
        for (const auto& c : inv.characters)
            EXPECT_EQ(c.acyclic_on_torus, !c.torus_parabolic);
    }
}

TEST(Characters, FiniteSetsForMixedPairs)
{
    RTReport mixed = rt_set(1, -1);
    EXPECT_FALSE(mixed.rt_set.empty());
    RTReport fig8 = rt_set(-1, -1);
    EXPECT_FALSE(fig8.rt_set.empty());
    EXPECT_LE(fig8.rt_set.size(), 15u);
    for (const auto& c : fig8.inventory.characters)
        EXPECT_GT(std::abs(c.xi1 + 2.0), 1e-6);
}

TEST(Characters, ParallelAndSerialRunsAgree)
{
    SpliceSystem sys = splice_equation(1, -1);
    auto a = solve_characters(sys, {}, true);
    auto b = solve_characters(sys, {}, false);
    ASSERT_EQ(a.characters.size(), b.characters.size());
    for (std::size_t i = 0; i < a.characters.size(); ++i)
    {
        EXPECT_EQ(a.characters[i].xi1, b.characters[i].xi1);
        EXPECT_EQ(a.characters[i].torsion_product, b.characters[i].torsion_product);
    }
}

TEST(Characters, NonPositiveToleranceIsRejected)
{
    Tolerances tol;
    tol.dedup = 0;
    EXPECT_THROW(rt_set(1, 1, tol), PreconditionError);
}

TEST(Torsion, OracleAgreementAtEveryCharacter)
{
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, -1}, std::pair{-1, -1}})
    {
        auto m1 = twistknot::build_model(a), m2 = twistknot::build_model(b);
        auto inv = solve_characters(splice_equation(a, b));
        for (const auto& c : inv.characters)
        {
            auto o1 = verify::chain_complex_torsion(m1.relator, twistknot::numeric_generators(c.s1, c.t1));
            auto o2 = verify::chain_complex_torsion(m2.relator, twistknot::numeric_generators(c.s2, c.t2));
            EXPECT_LT(std::abs(o1.value - c.torsion_1), 1e-7) << a << "," << b << " xi=" << c.xi1;
            EXPECT_LT(std::abs(o2.value - c.torsion_2), 1e-7) << a << "," << b << " xi=" << c.xi1;
            EXPECT_LT(o1.complex_defect, 1e-8);
        }
    }
}

TEST(Torsion, TrefoilSpecialPoints)
{
    auto m = twistknot::build_model(1);
    // s = 1, t = 1 lies on the Riley curve: not acyclic.
    ExteriorTorsion at_one = torsion_exterior(m, 1.0, 1.0);
    EXPECT_FALSE(at_one.acyclic);
    EXPECT_EQ(at_one.value, cd(0));
    EXPECT_THROW(torsion_exterior(m, 1.0, 0.0), PreconditionError);
    EXPECT_THROW(torsion_exterior(m, 1.3, 0.2), PreconditionError);
    cd s = std::polar(1.1, 0.7);
    ExteriorTorsion generic = torsion_exterior(m, s, s * s + 1.0 / (s * s) - 1.0);
    EXPECT_LT(std::abs(generic.value - 2.0), 1e-9);
}

TEST(Torus, HomologyDimensions)
{
    NumericMat I(1, 0, 0, 1);
    EXPECT_EQ(torus_acyclicity({NumericMat(1, 1, 0, 1), NumericMat(1, 2.5, 0, 1)}).dims, (std::array<int, 3>{1, 2, 1}));
    EXPECT_EQ(torus_acyclicity({I, I}).dims, (std::array<int, 3>{2, 4, 2}));
    auto h = torus_acyclicity({NumericMat(2, 0, 0, 0.5), NumericMat(cd(0, 3), 0, 0, 1.0 / cd(0, 3))});
    EXPECT_TRUE(h.acyclic);
    EXPECT_EQ(h.dims, (std::array<int, 3>{0, 0, 0}));
    EXPECT_THROW(torus_acyclicity({NumericMat(1, 1, 0, 1), NumericMat(1, 0, 1, 1)}), InvalidTorusRepresentation);
}

TEST(Bending, ClosedFormsAndInvariance)
{
    const auto& inv = trefoil_inventory();
    const SpliceCharacter* genuine = nullptr;
    for (const auto& c : inv.characters)
        if (!c.mirror())
        {
            genuine = &c;
            break;
        }
    ASSERT_NE(genuine, nullptr);
    auto m1 = twistknot::build_model(1);
    const auto& c = *genuine;

    BendingResult at_one = bending_family(m1, c.s1, c.t1, c.s2, c.t2, c.c_squared, 1.0);
    cd expected = c.s1 * c.s2 + 1.0 / (c.s1 * c.s2) - c.c_squared * c.t1;
    EXPECT_LT(std::abs(at_one.trace - expected), 1e-9);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    std::vector<cd> traces, mixed;
    for (int i = 0; i < 10; ++i)
    {
        cd a(u(rng), u(rng) - 1.25);
        BendingResult r = bending_family(m1, c.s1, c.t1, c.s2, c.t2, c.c_squared, a);
        EXPECT_LT(std::abs(r.trace - r.closed_form), 1e-9 * (1 + std::abs(r.trace)));
        EXPECT_LT(r.meridian_defect, 1e-9);
        EXPECT_LT(r.longitude_defect, 1e-8);
        EXPECT_LT(std::abs(r.trace - at_one.trace), 1e-9);
        traces.push_back(r.trace);
        mixed.push_back(r.mixed_trace);
    }
    // X2 = L1 commutes with every A_a, so only the mixed trace moves.
    EXPECT_EQ(dedup_values(traces, 1e-6).size(), 1u);
    EXPECT_GT(dedup_values(mixed, 1e-6).size(), 1u);
    EXPECT_TRUE(bending_trace_defect().is_zero());
    EXPECT_THROW(bending_family(m1, 1.0, 1.0, 1.0, 1.0, 1.0, 2.0), DegenerateCommutant);
}
