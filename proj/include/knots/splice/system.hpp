/**
 * Trace equations of the splice of two twist-knot exteriors.
 *
 * The gluing identifies the meridian of each side with the longitude of the
 * other: x1 = lambda2 and lambda1 = x2. On traces, with xi_i = tr rho(x_i),
 * this reads R1(xi2, xi1) = 0 and R2(xi1, xi2) = 0 where R_i(xi_l, xi_m) is
 * the boundary-trace relation of the i-th knot. Eliminating one of the two
 * traces gives a univariate equation.
 */

#ifndef KNOTS_SPLICE_SYSTEM_HPP
#define KNOTS_SPLICE_SYSTEM_HPP

#include "knots/errors.hpp"
#include "knots/polyring/algorithms.hpp"
#include "knots/polyring/io.hpp"
#include "knots/twistknot/model.hpp"

namespace knots::splice {

using polyring::MultiPoly;
using polyring::Rational;
using polyring::VarList;

struct SpliceSystem
{
    int q1 = 0;
    int q2 = 0;
    MultiPoly relation1;      // R1(xi_l, xi_m)
    MultiPoly relation2;      // R2(xi_l, xi_m)
    MultiPoly xi_equation;    // univariate in "xi": the equation satisfied by xi1
    MultiPoly xi2_equation;   // univariate in "xi": the equation satisfied by xi2
};

namespace detail {

// Squarefree, primitive, monomial-free, positive leading coefficient.
inline MultiPoly reduce_univariate(const MultiPoly& p)
{
    MultiPoly r = polyring::squarefree_part(p);
    r = polyring::strip_monomial(r).second;
    return polyring::primitive_integer(r);
}

/** Eliminate `drop` from the glued system over vars (xi1, xi2). */
inline MultiPoly eliminate(const MultiPoly& e1, const MultiPoly& e2, const std::string& drop, const std::string& keep)
{
    MultiPoly r = polyring::resultant(e1, e2, drop);
    if (r.is_zero())
        throw EliminationError("splice elimination collapsed: " + polyring::to_string(e1) + " and " +
                               polyring::to_string(e2) + " share a factor in " + drop);
    return reduce_univariate(r.with_vars({keep}).renamed(keep, "xi"));
}

}   // namespace detail

inline SpliceSystem splice_equation(int q1, int q2)
{
    const auto m1 = twistknot::build_model(q1);
    const auto m2 = twistknot::build_model(q2);
    const auto r1 = twistknot::xi_relation_full(m1);
    const auto r2 = twistknot::xi_relation_full(m2);
    if (r1.fallback_used || r2.fallback_used)
        throw EliminationError("boundary-trace relation unavailable (elimination of t collapsed)");

    const VarList v{"xi1", "xi2"};
    // R1(tr L1, tr X1) with tr L1 = xi2, tr X1 = xi1; R2(tr L2, tr X2) with tr L2 = xi1, tr X2 = xi2.
    const MultiPoly e1 = r1.relation.renamed("xi_l", "xi2").renamed("xi_m", "xi1").with_vars(v);
    const MultiPoly e2 = r2.relation.renamed("xi_l", "xi1").renamed("xi_m", "xi2").with_vars(v);

    SpliceSystem sys;
    sys.q1 = q1;
    sys.q2 = q2;
    sys.relation1 = r1.relation;
    sys.relation2 = r2.relation;
    sys.xi_equation = detail::eliminate(e2, e1, "xi2", "xi1");
    sys.xi2_equation = detail::eliminate(e2, e1, "xi1", "xi2");
    return sys;
}

}   // namespace knots::splice

#endif
