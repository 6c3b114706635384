#ifndef KNOTS_POLYRING_CHEBYSHEV_HPP
#define KNOTS_POLYRING_CHEBYSHEV_HPP

#include <string>

#include "knots/polyring/multipoly.hpp"

namespace knots::polyring {

/**
 * Normalized Chebyshev polynomial T_n over `vars`, in the variable `var`:
 * T_0 = 2, T_1 = x, T_{n+1} = x T_n - T_{n-1}, so that T_n(2cos a) = 2cos(na)
 * and T_n(s + 1/s) = s^n + s^-n.
 */
inline MultiPoly chebyshev(unsigned n, const VarList& vars, const std::string& var)
{
    MultiPoly prev(vars, Rational(2));
    if (n == 0)
        return prev;
    const MultiPoly x = MultiPoly::variable(vars, var);
    MultiPoly cur = x;
    for (unsigned k = 1; k < n; ++k)
    {
        MultiPoly next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline MultiPoly chebyshev(unsigned n, const std::string& var = "x")
{
    return chebyshev(n, VarList{var}, var);
}

/**
 * Rewrite a polynomial symmetric under s -> 1/s in the trace coordinate
 * xi = s + 1/s. The variable s is replaced in place by xi; the other
 * variables are untouched. Terms are peeled greedily from the top s-degree:
 * c s^d is matched against c s^-d and replaced by c T_d(xi).
 */
inline MultiPoly to_trace_coordinate(const MultiPoly& p,
                                     const std::string& s = "s",
                                     const std::string& xi = "xi")
{
    const std::size_t si = p.index_of(s);
    VarList out_vars = p.vars();
    out_vars[si] = xi;
    MultiPoly out(out_vars);
    MultiPoly rem = p;
    while (!rem.is_zero())
    {
        const int d = rem.degree(si);
        MultiPoly top = rem.coefficient(si, d);
        if (d < 0)
            throw SymmetryError("polynomial is not symmetric under " + s + " -> 1/" + s);
        if (d == 0)
        {
            if (rem.min_degree(si) < 0)
                throw SymmetryError("polynomial is not symmetric under " + s + " -> 1/" + s);
            out += top.renamed(s, xi);
            break;
        }
        if (rem.coefficient(si, -d) != top)
            throw SymmetryError("polynomial is not symmetric under " + s + " -> 1/" + s);
        Exponents up(p.num_vars(), 0), down(p.num_vars(), 0);
        up[si] = d;
        down[si] = -d;
        rem -= top.shifted(up) + top.shifted(down);
        out += top.renamed(s, xi) * chebyshev(static_cast<unsigned>(d), out_vars, xi);
    }
    return out;
}

}   // namespace knots::polyring

#endif
