/**
 * The acceptance suite: one pass/fail verdict per criterion, each with its
 * own wall-clock budget. A criterion passes only if its check holds and it
 * finished within the budget.
 */

#ifndef KNOTS_VERIFY_ACCEPTANCE_HPP
#define KNOTS_VERIFY_ACCEPTANCE_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "knots/apoly/apolynomial.hpp"
#include "knots/apoly/criterion.hpp"
#include "knots/apoly/newton.hpp"
#include "knots/polyring/chebyshev.hpp"
#include "knots/polyring/roots.hpp"
#include "knots/splice/bending.hpp"
#include "knots/splice/characters.hpp"
#include "knots/splice/system.hpp"
#include "knots/splice/torus.hpp"
#include "knots/twistknot/model.hpp"
#include "knots/verify/chain_complex.hpp"

namespace knots::verify {

using cd = std::complex<double>;
using polyring::MultiPoly;
using polyring::Rational;

struct CriterionOutcome
{
    int id = 0;
    std::string name;
    bool check_passed = false;
    std::string detail;
    double seconds = 0;
    double limit_seconds = 0;

    bool within_limit() const { return seconds <= limit_seconds; }
    bool passed() const { return check_passed && within_limit(); }
};

namespace detail {

using Check = std::function<std::pair<bool, std::string>()>;

inline CriterionOutcome timed(int id, std::string name, double limit, const Check& check)
{
    CriterionOutcome out;
    out.id = id;
    out.name = std::move(name);
    out.limit_seconds = limit;
    const auto start = std::chrono::steady_clock::now();
    try
    {
        auto [ok, detail] = check();
        out.check_passed = ok;
        out.detail = std::move(detail);
    }
    catch (const std::exception& e)
    {
        out.check_passed = false;
        out.detail = std::string("exception: ") + e.what();
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

inline std::vector<double> cos_family(int denominator, int max_k)
{
    std::vector<double> out;
    for (int k = 1; k <= max_k; k += 2)
        out.push_back(2 * std::cos(k * std::numbers::pi / denominator));
    return out;
}

/** Greedy one-to-one matching of real targets against complex values. */
inline bool matches(const std::vector<double>& expected, const std::vector<cd>& got, double tol)
{
    if (expected.size() != got.size())
        return false;
    std::vector<bool> used(got.size(), false);
    for (double e : expected)
    {
        bool found = false;
        for (std::size_t i = 0; i < got.size() && !found; ++i)
            if (!used[i] && std::abs(got[i] - e) <= tol)
                used[i] = found = true;
        if (!found)
            return false;
    }
    return true;
}

inline MultiPoly random_lm_poly(std::mt19937_64& rng, int terms, int hi)
{
    std::uniform_int_distribution<int> exp(0, hi), coef(-5, 5);
    MultiPoly p(apoly::lm_vars());
    for (int k = 0; k < terms; ++k)
    {
        int c = coef(rng);
        p.add_term({exp(rng), exp(rng)}, Rational(c == 0 ? 1 : c));
    }
    return p.is_zero() ? MultiPoly(apoly::lm_vars(), Rational(1)) : p;
}

inline words::NumericMat random_sl2(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    while (true)
    {
        cd a(u(rng), u(rng)), b(u(rng), u(rng)), c(u(rng), u(rng));
        if (std::abs(a) < 0.3)
            continue;
        return words::NumericMat(a, b, c, (1.0 + b * c) / a);
    }
}

}   // namespace detail

// ---------------------------------------------------------------------------

inline std::pair<bool, std::string> check_riley_exactness()
{
    const auto& v = twistknot::xit_vars();
    auto xi = [&](int k) { return MultiPoly::variable(v, "xi", k); };
    const MultiPoly t = MultiPoly::variable(v, "t"), one(v, Rational(1));
    const MultiPoly e1 = xi(2) - Rational(3) * one - t;
    const MultiPoly em1 = t * t - (xi(2) - Rational(5) * one) * t - xi(2) + Rational(5) * one;
    const MultiPoly r1 = twistknot::riley_xi(twistknot::build_model(1));
    const MultiPoly rm1 = twistknot::riley_xi(twistknot::build_model(-1));
    const bool ok1 = r1 == e1 || r1 == -e1, okm1 = rm1 == em1 || rm1 == -em1;
    return {ok1 && okm1, "q=1: " + polyring::to_string(r1) + "; q=-1: " + polyring::to_grouped_string(rm1, "t")};
}

inline std::pair<bool, std::string> check_longitude_identity()
{
    const auto& v = twistknot::st_vars();
    auto s = [&](int k) { return MultiPoly::variable(v, "s", k); };
    const MultiPoly one(v, Rational(1)), zero(v);
    const auto lon = twistknot::longitude(twistknot::build_model(1));
    const bool trace_ok = lon.trace_xi == -polyring::chebyshev(6, twistknot::xit_vars(), "xi");
    const MultiPoly troot = s(2) + s(-2) - one;
    const auto sub = lon.matrix.map([&](const MultiPoly& p) { return p.substitute("t", troot); });
    const MultiPoly c2 = -(one + s(2) + s(4)) * (one + s(6)) * s(-5);
    const bool matrix_ok = sub == words::SymbolicMat(-s(6), c2, zero, -s(-6));
    return {trace_ok && matrix_ok, std::string("trace = -T6(xi): ") + (trace_ok ? "yes" : "no") +
                                       "; matrix at t = s^2+s^-2-1: " + (matrix_ok ? "matches" : "differs")};
}

inline std::pair<bool, std::string> check_trefoil_equation()
{
    const auto sys = splice::splice_equation(1, 1);
    const MultiPoly xi = MultiPoly::variable({"xi"}, "xi");
    const MultiPoly t6 = polyring::chebyshev(6, "xi");
    const bool exact = sys.xi_equation == xi + t6.substitute("xi", t6);
    const auto roots = polyring::solve_roots(sys.xi_equation);
    std::vector<cd> values;
    bool simple = true;
    for (const auto& r : roots)
    {
        values.push_back(r.value);
        simple = simple && r.multiplicity_hint == 1;
    }
    std::vector<double> expected{-2.0};
    for (double x : detail::cos_family(35, 33))
        expected.push_back(x);
    for (double x : detail::cos_family(37, 35))
        expected.push_back(x);
    const bool match = detail::matches(expected, values, 1e-9);
    std::ostringstream os;
    os << "exact: " << (exact ? "yes" : "no") << "; distinct roots: " << values.size()
       << "; match cosine families: " << (match ? "yes" : "no");
    return {exact && simple && values.size() == 36 && match, os.str()};
}

inline std::pair<bool, std::string> check_figure_eight_equation()
{
    const auto sys = splice::splice_equation(-1, -1);
    MultiPoly expected({"xi"});
    for (auto [e, c] : std::vector<std::pair<int, long>>{
             {16, 1}, {14, -20}, {12, 158}, {10, -620}, {8, 1244}, {6, -1190}, {4, 487}, {2, -60}, {1, -1}, {0, -2}})
        expected.add_term({e}, Rational(c));
    const bool exact = sys.xi_equation == expected;
    const auto roots = polyring::solve_roots(sys.xi_equation);
    bool has_minus_two = false;
    int count = 0;
    for (const auto& r : roots)
    {
        count += r.multiplicity_hint;
        has_minus_two = has_minus_two || std::abs(r.value + 2.0) <= 1e-9;
    }
    std::ostringstream os;
    os << "exact: " << (exact ? "yes" : "no") << "; roots: " << count << "; contains -2: " << (has_minus_two ? "yes" : "no");
    return {exact && count == 16 && roots.size() == 16 && has_minus_two, os.str()};
}

inline std::pair<bool, std::string> check_mirror_separation()
{
    const auto inv = splice::solve_characters(splice::splice_equation(1, 1));
    std::vector<cd> genuine, mirror;
    double worst = 0;
    for (const auto& c : inv.characters)
    {
        worst = std::max(worst, c.residual());
        (c.mirror() ? mirror : genuine).push_back(c.xi1);
    }
    const bool g = detail::matches(detail::cos_family(35, 33), genuine, 1e-9);
    const bool m = detail::matches(detail::cos_family(37, 35), mirror, 1e-9);
    std::ostringstream os;
    os << "genuine: " << genuine.size() << "; mirror: " << mirror.size() << "; spurious roots: " << inv.spurious.size()
       << "; worst residual: " << worst;
    return {g && m && worst <= 1e-8, os.str()};
}

inline std::pair<bool, std::string> check_trefoil_torsion()
{
    const auto rep = splice::rt_set(1, 1);
    double worst = 0;
    int acyclic = 0;
    for (const auto& c : rep.inventory.characters)
    {
        if (c.mirror() || !c.acyclic_on_torus)
            continue;
        ++acyclic;
        worst = std::max({worst, std::abs(c.torsion_1 - 2.0), std::abs(c.torsion_2 - 2.0)});
    }
    const bool set_ok = rep.rt_set.size() == 1 && std::abs(rep.rt_set[0] - 4.0) <= 1e-7;
    std::ostringstream os;
    os << "acyclic genuine characters: " << acyclic << "; max |tau - 2|: " << worst << "; RT set size: " << rep.rt_set.size();
    return {acyclic > 0 && worst <= 1e-7 && set_ok, os.str()};
}

inline std::pair<bool, std::string> check_torsion_oracle()
{
    double worst = 0;
    int checked = 0;
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, -1}, std::pair{-1, -1}})
    {
        const auto m1 = twistknot::build_model(a), m2 = twistknot::build_model(b);
        const auto inv = splice::solve_characters(splice::splice_equation(a, b));
        for (const auto& c : inv.characters)
        {
            const auto o1 = chain_complex_torsion(m1.relator, c.side1());
            const auto o2 = chain_complex_torsion(m2.relator, twistknot::numeric_generators(c.s2, c.t2));
            worst = std::max({worst, std::abs(o1.value - c.torsion_1), std::abs(o2.value - c.torsion_2)});
            checked += 2;
        }
    }
    std::ostringstream os;
    os << "torsions compared: " << checked << "; max discrepancy: " << worst;
    return {checked > 0 && worst <= 1e-7, os.str()};
}

inline std::pair<bool, std::string> check_newton_laws(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    int failures = 0, disjoint = 0;
    const MultiPoly h = MultiPoly::variable(apoly::lm_vars(), "L") * MultiPoly::variable(apoly::lm_vars(), "M") +
                        MultiPoly(apoly::lm_vars(), Rational(2));
    for (int i = 0; i < 200; ++i)
    {
        MultiPoly f = detail::random_lm_poly(rng, 4, 4), g = detail::random_lm_poly(rng, 4, 4);
        const auto nf = apoly::newton_polygon(f), ng = apoly::newton_polygon(g);
        const auto sum = apoly::minkowski_sum(nf, ng);
        if (!(apoly::newton_polygon(f * g) == sum))
            ++failures;
        if (sum.slopes() != apoly::set_union(nf.slopes(), ng.slopes()))
            ++failures;
        if (i % 3 == 0)
        {
            f *= h;
            g *= h;
        }
        const auto common = apoly::set_intersection(apoly::newton_polygon(f).slopes(),
                                                    apoly::invert(apoly::newton_polygon(g).slopes()));
        if (common.empty())
        {
            ++disjoint;
            if (!polyring::gcd(f, apoly::transpose(g)).is_monomial())
                ++failures;
        }
    }
    std::ostringstream os;
    os << "pairs: 200; disjoint-slope pairs: " << disjoint << "; failures: " << failures;
    return {failures == 0, os.str()};
}

inline std::pair<bool, std::string> check_finiteness_criterion()
{
    std::ostringstream os;
    bool ok = true;
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, -1}, std::pair{-1, -1}})
    {
        const auto r = apoly::coprimality_criterion(apoly::a_polynomial(twistknot::build_model(a)),
                                                    apoly::a_polynomial(twistknot::build_model(b)));
        ok = ok && r.coprime();
        os << "(" << a << "," << b << "): " << apoly::to_string(r.verdict) << "; ";
    }
    return {ok, os.str()};
}

inline std::pair<bool, std::string> check_acyclicity_dichotomy(std::uint64_t seed)
{
    std::mt19937_64 rng(seed + 1);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_int_distribution<int> kind(0, 3);
    auto nonzero = [&] {
        while (true)
        {
            cd z(u(rng), u(rng));
            if (std::abs(z) > 0.1)
                return z;
        }
    };
    int parabolic = 0, other = 0, failures = 0;
    for (int i = 0; i < 500; ++i)
    {
        const words::NumericMat g = detail::random_sl2(rng), gi = g.inverse();
        words::NumericMat x(1, 0, 0, 1), l(1, 0, 0, 1);
        bool expect_parabolic = false;
        switch (kind(rng))
        {
        case 0:   // nontrivial parabolic pair
            x = words::NumericMat(1, nonzero(), 0, 1);
            l = words::NumericMat(1, nonzero(), 0, 1);
            expect_parabolic = true;
            break;
        case 1:   // parabolic meridian, trivial longitude
            x = words::NumericMat(1, nonzero(), 0, 1);
            expect_parabolic = true;
            break;
        case 2:   // diagonalizable pair
        {
            cd s = nonzero(), w = nonzero();
            if (std::abs(s - 1.0) < 0.1 || std::abs(s + 1.0) < 0.1)
                s += 0.5;
            x = words::NumericMat(s, 0, 0, 1.0 / s);
            l = words::NumericMat(w, 0, 0, 1.0 / w);
            break;
        }
        default:   // minus a parabolic: trace -2, not parabolic
            x = words::NumericMat(-1, nonzero(), 0, -1);
            l = words::NumericMat(1, nonzero(), 0, 1);
            break;
        }
        const auto h = splice::torus_acyclicity({g * x * gi, g * l * gi});
        const std::array<int, 3> want = expect_parabolic ? std::array<int, 3>{1, 2, 1} : std::array<int, 3>{0, 0, 0};
        if (h.dims != want || h.parabolic != expect_parabolic || h.acyclic == expect_parabolic)
            ++failures;
        (expect_parabolic ? parabolic : other)++;
    }
    std::ostringstream os;
    os << "parabolic: " << parabolic << "; non-parabolic: " << other << "; failures: " << failures;
    return {failures == 0, os.str()};
}

inline std::pair<bool, std::string> check_bending_witness(std::uint64_t seed)
{
    const bool symbolic = splice::bending_trace_defect().is_zero();
    const auto m1 = twistknot::build_model(1), m2 = twistknot::build_model(1);
    const auto inv = splice::solve_characters(splice::splice_equation(1, 1));
    const splice::SpliceCharacter* c = nullptr;
    for (const auto& ch : inv.characters)
        if (!ch.mirror() && ch.acyclic_on_torus)
        {
            c = &ch;
            break;
        }
    if (c == nullptr)
        return {false, "no genuine acyclic (1,1) character"};

    const auto side1 = c->side1(), side2 = c->side2();
    const cd trx1 = side1.at("x").trace(), trl1 = twistknot::longitude_numeric(m1, side1).trace();
    const cd trx2 = side2.at("x").trace(), trl2 = twistknot::longitude_numeric(m2, side2).trace();

    std::mt19937_64 rng(seed + 2);
    std::uniform_real_distribution<double> u(0.5, 2.0);
    double closed_gap = 0, invariant_gap = 0;
    std::vector<cd> mixed;
    for (int i = 0; i < 10; ++i)
    {
        const cd a(u(rng), u(rng) - 1.25);
        const auto r = splice::bending_family(m1, c->s1, c->t1, c->s2, c->t2, c->c_squared, a);
        closed_gap = std::max(closed_gap, std::abs(r.trace - r.closed_form) / (1 + std::abs(r.trace)));
        // Bent first side: both generators conjugated by A.
        const words::Assignment<cd> bent{{"x", r.A * side1.at("x") * r.A.inverse()}, {"y", r.Y1_conjugated}};
        invariant_gap = std::max({invariant_gap, std::abs(bent.at("x").trace() - trx1),
                                  std::abs(twistknot::longitude_numeric(m1, bent).trace() - trl1),
                                  std::abs(side2.at("x").trace() - trx2),
                                  std::abs(twistknot::longitude_numeric(m2, side2).trace() - trl2)});
        mixed.push_back(r.mixed_trace);
    }
    const std::size_t distinct = splice::dedup_values(mixed, 1e-6).size();
    std::ostringstream os;
    os << "symbolic closed form: " << (symbolic ? "exact" : "differs") << "; max closed-form gap: " << closed_gap
       << "; distinct tr(A Y1 A^-1 Y2): " << distinct << "; max boundary-trace drift: " << invariant_gap;
    return {symbolic && closed_gap <= 1e-9 && distinct >= 2 && invariant_gap <= 1e-8, os.str()};
}

/** Run every criterion in order. `seed` drives the randomized ones. */
inline std::vector<CriterionOutcome> run_acceptance(std::uint64_t seed = 2024)
{
    std::vector<CriterionOutcome> out;
    out.push_back(detail::timed(1, "Riley exactness", 1, check_riley_exactness));
    out.push_back(detail::timed(2, "Longitude identity", 1, check_longitude_identity));
    out.push_back(detail::timed(3, "Splice equation, trefoil", 5, check_trefoil_equation));
    out.push_back(detail::timed(4, "Splice equation, figure-eight", 5, check_figure_eight_equation));
    out.push_back(detail::timed(5, "Mirror separation", 10, check_mirror_separation));
    out.push_back(detail::timed(6, "Torsion value", 10, check_trefoil_torsion));
    out.push_back(detail::timed(7, "Torsion oracle equivalence", 10, check_torsion_oracle));
    out.push_back(detail::timed(8, "Newton-polygon laws", 10, [seed] { return check_newton_laws(seed); }));
    out.push_back(detail::timed(9, "Finiteness criterion", 10, check_finiteness_criterion));
    out.push_back(detail::timed(10, "Acyclicity dichotomy", 5, [seed] { return check_acyclicity_dichotomy(seed); }));
    out.push_back(detail::timed(11, "Bending witness", 2, [seed] { return check_bending_witness(seed); }));
    return out;
}

}   // namespace knots::verify

#endif
