#ifndef KNOTS_SPLICE_TOLERANCES_HPP
#define KNOTS_SPLICE_TOLERANCES_HPP

#include <string>

#include "knots/errors.hpp"

namespace knots::splice {

/** Numeric tolerances of the splice pipeline. All must be strictly positive. */
struct Tolerances
{
    double root_cert = 1e-9;   // relative residual certifying a polynomial root
    double dedup = 1e-7;       // distance below which torsion values coincide
    double rank = 1e-8;        // relative singular-value threshold for ranks
    double gluing = 1e-8;      // relative defect of the matrix gluing equations

    void validate() const
    {
        for (auto [name, v] : {std::pair{"root_cert", root_cert}, std::pair{"dedup", dedup},
                               std::pair{"rank", rank}, std::pair{"gluing", gluing}})
            if (!(v > 0))
                throw PreconditionError(std::string("tolerance '") + name + "' must be strictly positive");
    }
};

/** Normalization tag attached to every reported torsion value. */
inline const char* torsion_convention()
{
    return "wada: det rho(dr/dy) / det(rho(x) - I), r = z^q x z^-q y^-1; 0 when not acyclic";
}

}   // namespace knots::splice

#endif
