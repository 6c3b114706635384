/**
 * A-polynomials of twist knots by elimination on the Riley curve.
 *
 * On an irreducible character the meridian eigenvalue is M = s and the
 * longitude eigenvalue L is the (1,1)-entry of rho(lambda), reduced modulo
 * phi_q(s, t). Eliminating t between phi_q(M, t) and the eigenvalue relation
 * leaves the nonabelian part of the A-polynomial; the abelian factor L - 1 is
 * appended.
 */

#ifndef KNOTS_APOLY_APOLYNOMIAL_HPP
#define KNOTS_APOLY_APOLYNOMIAL_HPP

#include <string>

#include "knots/errors.hpp"
#include "knots/polyring/algorithms.hpp"
#include "knots/polyring/io.hpp"
#include "knots/twistknot/model.hpp"

namespace knots::apoly {

using polyring::MultiPoly;
using polyring::Rational;
using polyring::VarList;

inline const VarList& lm_vars()
{
    static const VarList vars{"L", "M"};
    return vars;
}

struct APolynomial
{
    MultiPoly polynomial;    // in (L, M), including the factor L - 1
    MultiPoly nonabelian;    // the eliminated part, without L - 1
};

/**
 * The parametrized A-polynomial of J(2,2q): squarefree, primitive over the
 * integers, divisible by neither L nor M.
 */
inline APolynomial a_polynomial_full(const twistknot::TwistKnotModel& m)
{
    const twistknot::LongitudeData lon = twistknot::longitude(m);
    if (!lon.upper_triangular)
        throw EliminationError("longitude image is not upper triangular on the Riley curve; eigenvalue unavailable");

    const VarList v{"L", "M", "t"};
    auto lift = [&](const MultiPoly& p_st) { return p_st.renamed("s", "M").with_vars(v); };

    // L * M^k - num(M, t) with num / M^k the reduced eigenvalue.
    const MultiPoly eig = lift(lon.eigenvalue);
    const polyring::Exponents shift = polyring::min_exponents(eig);
    polyring::Exponents clear(v.size(), 0);
    clear[1] = -std::min(0, shift[1]);
    const MultiPoly num = eig.shifted(clear);
    const MultiPoly relation = MultiPoly::variable(v, "L") * MultiPoly::monomial(v, clear, Rational(1)) - num;

    MultiPoly elim(v);
    if (relation.degree("t") <= 0)
    {
        elim = relation;
    }
    else
    {
        const MultiPoly phi = polyring::clear_negative_exponents(lift(twistknot::riley_polynomial(m)));
        elim = polyring::resultant(phi, relation, "t");
        if (elim.is_zero())
            throw EliminationError("resultant of the Riley polynomial and the eigenvalue relation vanished: phi = " +
                                   polyring::to_string(phi) + ", relation = " + polyring::to_string(relation));
    }
    MultiPoly f = polyring::squarefree_part(elim.with_vars(lm_vars()));
    f = polyring::strip_monomial(f).second;
    // Factors in M alone would be components with constant meridian trace.
    f = polyring::primitive_part(f, "L");
    if (f.degree("L") <= 0)
        throw EliminationError("eliminated polynomial has no L-dependence: " + polyring::to_string(f));
    f = polyring::normalize_sign_in(polyring::primitive_integer(f), "L");

    const MultiPoly abelian = MultiPoly::variable(lm_vars(), "L") - MultiPoly(lm_vars(), Rational(1));
    MultiPoly full = f;
    if (!polyring::divides(abelian, f))
        full = f * abelian;
    return {polyring::normalize_sign_in(polyring::primitive_integer(full), "L"), f};
}

inline MultiPoly a_polynomial(const twistknot::TwistKnotModel& m)
{
    return a_polynomial_full(m).polynomial;
}

/** f^T(L, M) = f(M, L). */
inline MultiPoly transpose(const MultiPoly& f, const std::string& a = "L", const std::string& b = "M")
{
    return f.swapped(a, b);
}

}   // namespace knots::apoly

#endif
