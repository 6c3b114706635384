/**
 * Reidemeister torsion of a twist-knot exterior at an irreducible
 * representation, as the Wada quotient of Fox-derivative determinants for
 * the one-relator presentation <x, y | z^q x z^-q y^-1>.
 */

#ifndef KNOTS_SPLICE_TORSION_HPP
#define KNOTS_SPLICE_TORSION_HPP

#include <complex>
#include <string>

#include "knots/errors.hpp"
#include "knots/twistknot/model.hpp"
#include "knots/words/fox.hpp"

namespace knots::splice {

using cd = std::complex<double>;

struct ExteriorTorsion
{
    cd value = 0;
    bool acyclic = false;
    std::string route;   // "dr/dy over x-1", "dr/dx over y-1" or "not acyclic"
};

/** Relative residual of the Riley polynomial at a numeric point. */
inline double riley_residual(const polyring::MultiPoly& phi, cd s, cd t)
{
    const std::vector<cd> pt{s, t};
    const double scale = phi.magnitude<double>(pt);
    return scale == 0 ? 0 : std::abs(phi.evaluate<double>(pt)) / scale;
}

/**
 * tau = det rho(dr/dy) / det(rho(x) - I), falling back to
 * det rho(dr/dx) / det(rho(y) - I) when the first denominator vanishes
 * (the two agree: the fundamental formula gives
 * rho(dr/dx)(X - I) + rho(dr/dy)(Y - I) = 0, and 2x2 determinants are even).
 * When both vanish (tr rho(x) = 2) the twisted complex is not acyclic and
 * the torsion is reported as 0.
 */
inline ExteriorTorsion torsion_exterior(const twistknot::TwistKnotModel& m, cd s, cd t,
                                        double residual_tol = 1e-8, double singular_tol = 1e-10)
{
    if (std::abs(t) <= 1e-12)
        throw PreconditionError("t = 0 gives a reducible representation; torsion needs an irreducible one");
    const double res = riley_residual(twistknot::riley_polynomial(m), s, t);
    if (res > residual_tol)
        throw PreconditionError("point is not on the Riley curve (relative residual " + std::to_string(res) + ")");

    const auto a = twistknot::numeric_generators(s, t);
    const words::NumericMat I(1, 0, 0, 1);
    const cd dx = (a.at("x") - I).det();
    const cd dy = (a.at("y") - I).det();
    ExteriorTorsion out;
    if (std::abs(dx) > singular_tol)
    {
        out.value = words::evaluate_group_ring(words::fox_derivative(m.relator, "y"), a).det() / dx;
        out.route = "dr/dy over x-1";
    }
    else if (std::abs(dy) > singular_tol)
    {
        out.value = words::evaluate_group_ring(words::fox_derivative(m.relator, "x"), a).det() / dy;
        out.route = "dr/dx over y-1";
    }
    else
    {
        out.route = "not acyclic";
        return out;
    }
    out.acyclic = std::abs(out.value) > singular_tol;
    if (!out.acyclic)
    {
        out.value = 0;
        out.route = "not acyclic";
    }
    return out;
}

}   // namespace knots::splice

#endif
