#ifndef KNOTS_TESTS_RANDOM_POLY_HPP
#define KNOTS_TESTS_RANDOM_POLY_HPP

#include <random>

#include "knots/polyring/multipoly.hpp"

namespace knots::test_support {

using polyring::Exponents;
using polyring::MultiPoly;
using polyring::Rational;
using polyring::VarList;

/** Random polynomial with `terms` terms, exponents in [lo, hi], integer coefficients in [-5, 5]. */
inline MultiPoly random_poly(std::mt19937_64& rng, const VarList& vars, int terms, int lo, int hi)
{
    std::uniform_int_distribution<int> exp(lo, hi), coef(-5, 5);
    MultiPoly p(vars);
    for (int k = 0; k < terms; ++k)
    {
        Exponents e(vars.size());
        for (auto& x : e)
            x = exp(rng);
        int c = coef(rng);
        p.add_term(e, Rational(c == 0 ? 1 : c));
    }
    if (p.is_zero())
        p = MultiPoly(vars, Rational(1));
    return p;
}

/** Random polynomial of positive degree in every variable of `vars`. */
inline MultiPoly random_nonconstant(std::mt19937_64& rng, const VarList& vars, int terms, int hi)
{
    while (true)
    {
        MultiPoly p = random_poly(rng, vars, terms, 0, hi);
        if (p.total_degree() > 0 && p.size() > 1)
            return p;
    }
}

}   // namespace knots::test_support

#endif
