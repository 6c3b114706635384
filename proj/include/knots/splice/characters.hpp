/**
 * Characters of the splice group, reconstructed from the roots of the trace
 * equation, and the set of Reidemeister torsions they carry.
 *
 * For a root xi1 the first side is lifted to s1 = (xi1 + sqrt(xi1^2 - 4))/2
 * and every root t1 of phi_q1(s1, t). The second side's meridian is forced
 * to be T = L1 (genuine gluing lambda1 = x2) or T = L1^-1 (the mirror
 * gluing); writing T = (s2, c^2; 0, 1/s2), the second side is the standard
 * representation at (s2, t2) conjugated by diag(c, 1/c):
 *
 *     X2 = (s2, c^2; 0, 1/s2),   Y2 = (s2, 0; -t2/c^2, 1/s2).
 *
 * A lift is accepted when the remaining gluing equation x1 = lambda2 holds
 * numerically.
 */

#ifndef KNOTS_SPLICE_CHARACTERS_HPP
#define KNOTS_SPLICE_CHARACTERS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <future>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

#include "knots/apoly/apolynomial.hpp"
#include "knots/apoly/criterion.hpp"
#include "knots/polyring/roots.hpp"
#include "knots/splice/system.hpp"
#include "knots/splice/tolerances.hpp"
#include "knots/splice/torsion.hpp"
#include "knots/splice/torus.hpp"
#include "knots/twistknot/model.hpp"

namespace knots::splice {

enum class Orientation
{
    genuine,
    mirror,
};

struct SpliceCharacter
{
    cd xi1, xi2;
    cd s1, t1, s2, t2;
    cd c_squared;
    double riley_residual1 = 0;
    double riley_residual2 = 0;
    double gluing_residual = 0;
    Orientation orientation = Orientation::genuine;
    bool acyclic_on_torus = false;
    std::array<int, 3> torus_dims{0, 0, 0};
    bool torus_parabolic = false;
    cd torsion_1, torsion_2, torsion_product;

    bool mirror() const { return orientation == Orientation::mirror; }
    double residual() const { return std::max({riley_residual1, riley_residual2, gluing_residual}); }

    words::Assignment<cd> side1() const { return twistknot::numeric_generators(s1, t1); }

    /** The second side, conjugated so that its meridian is (s2, c^2; 0, 1/s2). */
    words::Assignment<cd> side2() const
    {
        return {{"x", NumericMat(s2, c_squared, 0.0, 1.0 / s2)}, {"y", NumericMat(s2, 0.0, -t2 / c_squared, 1.0 / s2)}};
    }
};

/** A root of the trace equation that does not lift to a character. */
struct SpuriousRoot
{
    cd xi;
    double best_residual = std::numeric_limits<double>::infinity();
    std::string reason;
};

struct CharacterInventory
{
    std::vector<polyring::ComplexRoot> roots;
    std::vector<SpliceCharacter> characters;
    std::vector<SpuriousRoot> spurious;
};

namespace detail {

inline double rel_defect(const NumericMat& a, const NumericMat& b)
{
    return words::norm_inf(a - b) / (1.0 + words::norm_inf(b));
}

struct RootResult
{
    std::vector<SpliceCharacter> characters;
    std::vector<SpuriousRoot> spurious;
};

inline RootResult lift_root(const SpliceSystem& sys, const twistknot::TwistKnotModel& m1,
                            const twistknot::TwistKnotModel& m2, const MultiPoly& phi1, const MultiPoly& phi2,
                            cd xi1, const Tolerances& tol)
{
    RootResult out;
    polyring::RootSolverOptions opt;
    opt.certify_tolerance = tol.root_cert;
    const cd s1 = (xi1 + std::sqrt(xi1 * xi1 - 4.0)) / 2.0;
    double best = std::numeric_limits<double>::infinity();
    std::string reason = "gluing equations not satisfied";
    bool any_reducible = false;

    for (cd t1 : twistknot::riley_t_roots(phi1, s1, opt))
    {
        if (std::abs(t1) <= 1e-9)
        {
            any_reducible = true;
            continue;
        }
        const auto a1 = twistknot::numeric_generators(s1, t1);
        const NumericMat X1 = a1.at("x");
        const NumericMat L1 = twistknot::longitude_numeric(m1, a1);
        for (Orientation o : {Orientation::genuine, Orientation::mirror})
        {
            const NumericMat T = o == Orientation::genuine ? L1 : L1.inverse();
            const cd s2 = T.a11, c2 = T.a12;
            const double lower = std::abs(T.a21) / (1.0 + words::norm_inf(T));
            if (std::abs(c2) <= 1e-12 || std::abs(s2) <= 1e-12)
            {
                best = std::min(best, 1.0);
                reason = "longitude image is central; no irreducible second side";
                continue;
            }
            for (cd t2 : twistknot::riley_t_roots(phi2, s2, opt))
            {
                if (std::abs(t2) <= 1e-9)
                {
                    any_reducible = true;
                    continue;
                }
                SpliceCharacter ch;
                ch.xi1 = xi1;
                ch.s1 = s1;
                ch.t1 = t1;
                ch.s2 = s2;
                ch.t2 = t2;
                ch.xi2 = s2 + 1.0 / s2;
                ch.c_squared = c2;
                ch.orientation = o;
                const auto a2 = ch.side2();
                const NumericMat L2 = words::evaluate_word(m2.lambda_word, a2);
                ch.gluing_residual = std::max(lower, rel_defect(L2, X1));
                ch.riley_residual1 = riley_residual(phi1, s1, t1);
                ch.riley_residual2 = riley_residual(phi2, s2, t2);
                best = std::min(best, ch.residual());
                if (ch.gluing_residual > tol.gluing || ch.riley_residual1 > tol.gluing || ch.riley_residual2 > tol.gluing)
                    continue;

                const TorusHomology h = torus_acyclicity({X1, L1}, tol.rank);
                ch.acyclic_on_torus = h.acyclic;
                ch.torus_dims = h.dims;
                ch.torus_parabolic = h.parabolic;
                const ExteriorTorsion e1 = torsion_exterior(m1, s1, t1, tol.gluing);
                const ExteriorTorsion e2 = torsion_exterior(m2, s2, t2, tol.gluing);
                ch.torsion_1 = e1.value;
                ch.torsion_2 = e2.value;
                ch.torsion_product = h.acyclic ? e1.value * e2.value : cd(0);
                out.characters.push_back(ch);
            }
        }
    }
    (void)sys;
    if (out.characters.empty())
    {
        if (any_reducible && !std::isfinite(best))
            reason = "only reducible (t = 0) lifts";
        out.spurious.push_back({xi1, best, reason});
    }
    return out;
}

inline auto character_key(const SpliceCharacter& c)
{
    return std::make_tuple(c.xi1.real(), c.xi1.imag(), static_cast<int>(c.orientation), c.t1.real(), c.t1.imag(),
                           c.t2.real(), c.t2.imag());
}

}   // namespace detail

/**
 * Solve the trace equation and reconstruct every character over its roots.
 * Roots are processed concurrently; the output is sorted by (Re xi1, Im xi1),
 * orientation and the t-branches, so it does not depend on scheduling.
 */
inline CharacterInventory solve_characters(const SpliceSystem& sys, const Tolerances& tol = {}, bool parallel = true)
{
    tol.validate();
    const auto m1 = twistknot::build_model(sys.q1);
    const auto m2 = twistknot::build_model(sys.q2);
    const MultiPoly phi1 = twistknot::riley_polynomial(m1);
    const MultiPoly phi2 = twistknot::riley_polynomial(m2);

    polyring::RootSolverOptions opt;
    opt.certify_tolerance = tol.root_cert;
    CharacterInventory inv;
    inv.roots = polyring::solve_roots(sys.xi_equation, opt);

    std::vector<detail::RootResult> results(inv.roots.size());
    if (parallel && inv.roots.size() > 1)
    {
        std::vector<std::future<detail::RootResult>> jobs;
        for (const auto& r : inv.roots)
            jobs.push_back(std::async(std::launch::async, [&, xi = r.value] {
                return detail::lift_root(sys, m1, m2, phi1, phi2, xi, tol);
            }));
        for (std::size_t i = 0; i < jobs.size(); ++i)
            results[i] = jobs[i].get();
    }
    else
    {
        for (std::size_t i = 0; i < inv.roots.size(); ++i)
            results[i] = detail::lift_root(sys, m1, m2, phi1, phi2, inv.roots[i].value, tol);
    }
    for (auto& r : results)
    {
        inv.characters.insert(inv.characters.end(), r.characters.begin(), r.characters.end());
        inv.spurious.insert(inv.spurious.end(), r.spurious.begin(), r.spurious.end());
    }
    std::sort(inv.characters.begin(), inv.characters.end(),
              [](const auto& a, const auto& b) { return detail::character_key(a) < detail::character_key(b); });
    std::sort(inv.spurious.begin(), inv.spurious.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.xi.real(), a.xi.imag()) < std::make_pair(b.xi.real(), b.xi.imag());
    });
    return inv;
}

/** Round to a 1e-10 grid so equal values print identically; -0 becomes 0. */
inline cd snap(cd z)
{
    auto r = [](double v) {
        double x = std::round(v * 1e10) / 1e10;
        return x == 0 ? 0.0 : x;
    };
    return {r(z.real()), r(z.imag())};
}

struct RTReport
{
    SpliceSystem system;
    apoly::CriterionResult criterion;
    CharacterInventory inventory;
    std::vector<cd> rt_set;
    Tolerances tolerances;
    std::string convention = torsion_convention();
};

/** Deduplicate at the given distance, keeping the first of each cluster in sorted order. */
inline std::vector<cd> dedup_values(std::vector<cd> values, double distance)
{
    auto less = [](cd a, cd b) { return std::make_pair(a.real(), a.imag()) < std::make_pair(b.real(), b.imag()); };
    std::sort(values.begin(), values.end(), less);
    std::vector<cd> out;
    for (cd v : values)
    {
        bool seen = false;
        for (cd u : out)
            if (std::abs(u - v) <= distance)
                seen = true;
        if (!seen)
            out.push_back(v);
    }
    return out;
}

/**
 * RT(Sigma(K1, K2)): torsion products over the genuine characters that are
 * acyclic on the gluing torus, deduplicated. The coprimality hypothesis is
 * checked and reported alongside.
 */
inline RTReport rt_set(int q1, int q2, const Tolerances& tol = {})
{
    tol.validate();
    RTReport rep;
    rep.tolerances = tol;
    rep.system = splice_equation(q1, q2);
    rep.criterion = apoly::coprimality_criterion(apoly::a_polynomial(twistknot::build_model(q1)),
                                                 apoly::a_polynomial(twistknot::build_model(q2)));
    rep.inventory = solve_characters(rep.system, tol);
    std::vector<cd> values;
    for (const auto& c : rep.inventory.characters)
        if (!c.mirror() && c.acyclic_on_torus)
            values.push_back(c.torsion_product);
    for (cd& v : values)
        v = snap(v);
    rep.rt_set = dedup_values(std::move(values), tol.dedup);
    return rep;
}

}   // namespace knots::splice

#endif
