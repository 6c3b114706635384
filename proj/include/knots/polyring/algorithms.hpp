/**
 * Exact algorithms on MultiPoly: division, gcd, resultants, squarefree parts
 * and reduction modulo a polynomial with unit leading coefficient.
 *
 * gcd uses a primitive polynomial remainder sequence, recursing on the
 * variable list for contents. Resultants are Sylvester determinants computed
 * by fraction-free (Bareiss) elimination. Laurent inputs are first moved into
 * the polynomial ring by multiplying with a monomial.
 */

#ifndef KNOTS_POLYRING_ALGORITHMS_HPP
#define KNOTS_POLYRING_ALGORITHMS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "knots/polyring/multipoly.hpp"

namespace knots::polyring {

/** Componentwise minimum exponent over all terms (zero vector for p = 0). */
inline Exponents min_exponents(const MultiPoly& p)
{
    Exponents m(p.num_vars(), 0);
    if (p.is_zero())
        return m;
    m = p.terms().begin()->first;
    for (const auto& [e, c] : p.terms())
        for (std::size_t i = 0; i < e.size(); ++i)
            m[i] = std::min(m[i], e[i]);
    return m;
}

/**
 * Split p = vars^shift * q with q a polynomial divisible by no variable.
 */
inline std::pair<Exponents, MultiPoly> strip_monomial(const MultiPoly& p)
{
    Exponents m = min_exponents(p);
    Exponents neg(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        neg[i] = -m[i];
    return {m, p.shifted(neg)};
}

/** Multiply by the smallest monomial that makes every exponent nonnegative. */
inline MultiPoly clear_negative_exponents(const MultiPoly& p)
{
    Exponents m = min_exponents(p);
    for (auto& x : m)
        x = x < 0 ? -x : 0;
    return p.shifted(m);
}

/**
 * Scale to integer coefficients with gcd 1 and positive lexicographic
 * leading coefficient. The zero polynomial is returned unchanged.
 */
inline MultiPoly primitive_integer(const MultiPoly& p)
{
    if (p.is_zero())
        return p;
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : p.terms())
    {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (p.leading_term().second < 0)
        scale = -scale;
    return p * scale;
}

/** Same as primitive_integer but with the sign of the leading coefficient in `var` made positive. */
inline MultiPoly normalize_sign_in(const MultiPoly& p, const std::string& var)
{
    MultiPoly q = primitive_integer(p);
    if (q.is_zero())
        return q;
    if (q.leading_coefficient(q.index_of(var)).leading_term().second < 0)
        return -q;
    return q;
}

namespace detail {

// Lexicographic multivariate division of polynomials (no negative exponents).
inline std::optional<MultiPoly> divide_polynomial(MultiPoly rem, const MultiPoly& d)
{
    const auto& [de, dc] = d.leading_term();
    MultiPoly quotient(rem.vars());
    const std::size_t n = rem.num_vars();
    while (!rem.is_zero())
    {
        const auto [re, rc] = rem.leading_term();
        Exponents qe(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            qe[i] = re[i] - de[i];
            if (qe[i] < 0)
                return std::nullopt;
        }
        Rational qc = rc / dc;
        quotient.add_term(qe, qc);
        rem -= d.shifted(qe) * qc;
    }
    return quotient;
}

}   // namespace detail

/**
 * Exact quotient p / d in the Laurent ring, or nullopt when d does not
 * divide p. Polynomial inputs (no negative exponents) also get an exact
 * polynomial quotient when one exists.
 */
inline std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d)
{
    p.check_aligned(d);
    if (d.is_zero())
        throw DegenerateInput("division by the zero polynomial");
    if (p.is_zero())
        return MultiPoly(p.vars());
    auto [sp, P] = strip_monomial(p);
    auto [sd, D] = strip_monomial(d);
    auto q = detail::divide_polynomial(P, D);
    if (!q)
        return std::nullopt;
    Exponents shift(sp.size());
    for (std::size_t i = 0; i < sp.size(); ++i)
        shift[i] = sp[i] - sd[i];
    MultiPoly out = q->shifted(shift);
    // In the polynomial ring a negative exponent in the quotient means no divisibility.
    if (!p.is_laurent() && !d.is_laurent() && out.is_laurent())
        return std::nullopt;
    return out;
}

inline bool divides(const MultiPoly& d, const MultiPoly& p)
{
    return divide_exact(p, d).has_value();
}

/** divide_exact that throws when the division is not exact. */
inline MultiPoly exact_quotient(const MultiPoly& p, const MultiPoly& d)
{
    auto q = divide_exact(p, d);
    if (!q)
        throw EliminationError("expected exact division failed");
    return *q;
}

/**
 * Pseudo-remainder of a by b with respect to variable `var`; the result is
 * reduced to a primitive integer polynomial (a unit multiple of the classical
 * pseudo-remainder).
 */
inline MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::size_t var)
{
    const int db = b.degree(var);
    const MultiPoly lc = b.leading_coefficient(var);
    MultiPoly r = a;
    while (!r.is_zero() && r.degree(var) >= db)
    {
        const int dr = r.degree(var);
        MultiPoly lr = r.leading_coefficient(var);
        Exponents shift(r.num_vars(), 0);
        shift[var] = dr - db;
        r = lc * r - lr * b.shifted(shift);
        r = primitive_integer(r);
    }
    return r;
}

namespace detail {

inline std::optional<std::size_t> first_active_var(const MultiPoly& a, const MultiPoly& b)
{
    for (std::size_t i = 0; i < a.num_vars(); ++i)
        if (a.degree(i) > 0 || b.degree(i) > 0)
            return i;
    return std::nullopt;
}

inline MultiPoly gcd_polynomial(const MultiPoly& a, const MultiPoly& b);

// gcd of the coefficients of p viewed as a polynomial in var.
inline MultiPoly content_in(const MultiPoly& p, std::size_t var)
{
    MultiPoly g(p.vars());
    bool first = true;
    for (auto& [k, c] : p.coefficients(var))
    {
        if (first)
        {
            g = primitive_integer(c);
            first = false;
        }
        else
        {
            g = gcd_polynomial(g, c);
        }
        if (g.is_constant())
            return MultiPoly(p.vars(), Rational(1));
    }
    return g;
}

inline MultiPoly primitive_part_in(const MultiPoly& p, std::size_t var)
{
    if (p.is_zero())
        return p;
    return primitive_integer(exact_quotient(p, content_in(p, var)));
}

// gcd of polynomials without negative exponents; callers strip monomials.
inline MultiPoly gcd_polynomial(const MultiPoly& a, const MultiPoly& b)
{
    const MultiPoly one(a.vars(), Rational(1));
    if (a.is_zero())
        return primitive_integer(b);
    if (b.is_zero())
        return primitive_integer(a);
    if (a.is_constant() || b.is_constant())
        return one;
    auto var = first_active_var(a, b);
    if (!var)
        return one;
    const std::size_t v = *var;

    MultiPoly ca = content_in(a, v);
    MultiPoly cb = content_in(b, v);
    MultiPoly g_content = gcd_polynomial(ca, cb);

    MultiPoly pa = primitive_integer(exact_quotient(a, ca));
    MultiPoly pb = primitive_integer(exact_quotient(b, cb));
    MultiPoly g_pp = one;
    if (pa.degree(v) > 0 && pb.degree(v) > 0)
    {
        if (pa.degree(v) < pb.degree(v))
            std::swap(pa, pb);
        while (true)
        {
            MultiPoly r = pseudo_remainder(pa, pb, v);
            if (r.is_zero())
            {
                g_pp = primitive_part_in(pb, v);
                break;
            }
            if (r.degree(v) == 0)
                break;
            pa = std::move(pb);
            pb = primitive_part_in(r, v);
        }
    }
    return primitive_integer(g_content * g_pp);
}

}   // namespace detail

/** Content of p with respect to var (gcd of its coefficients, primitive integer). */
inline MultiPoly content(const MultiPoly& p, const std::string& var)
{
    auto [shift, q] = strip_monomial(p);
    (void)shift;
    return detail::content_in(q, p.index_of(var));
}

/** p divided by its content in var. */
inline MultiPoly primitive_part(const MultiPoly& p, const std::string& var)
{
    return primitive_integer(exact_quotient(p, content(p, var)));
}

/**
 * Greatest common divisor, primitive over the integers with positive
 * leading coefficient. For polynomial inputs the common monomial factor is
 * kept; for Laurent inputs monomials are units and are discarded.
 */
inline MultiPoly gcd(const MultiPoly& p, const MultiPoly& q)
{
    p.check_aligned(q);
    if (p.is_zero() && q.is_zero())
        return p;
    auto [sp, P] = strip_monomial(p);
    auto [sq, Q] = strip_monomial(q);
    MultiPoly g = detail::gcd_polynomial(P, Q);
    if (!p.is_laurent() && !q.is_laurent() && !p.is_zero() && !q.is_zero())
    {
        Exponents m(sp.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            m[i] = std::min(sp[i], sq[i]);
        g = g.shifted(m);
    }
    else if (p.is_zero() || q.is_zero())
    {
        g = primitive_integer(p.is_zero() ? q : p);
    }
    return g;
}

inline MultiPoly gcd(const std::vector<MultiPoly>& polys)
{
    if (polys.empty())
        throw DegenerateInput("gcd of an empty list");
    MultiPoly g = polys.front();
    for (std::size_t i = 1; i < polys.size(); ++i)
        g = gcd(g, polys[i]);
    return primitive_integer(g);
}

/**
 * Squarefree part p / gcd(p, dp/dv_1, ..., dp/dv_n), primitive integer.
 */
inline MultiPoly squarefree_part(const MultiPoly& p)
{
    if (p.is_zero())
        throw DegenerateInput("squarefree part of the zero polynomial");
    MultiPoly base = clear_negative_exponents(p);
    MultiPoly g = base;
    for (std::size_t i = 0; i < base.num_vars(); ++i)
        if (base.degree(i) > 0)
            g = gcd(g, base.derivative(i));
    return primitive_integer(exact_quotient(base, g));
}

/**
 * Yun squarefree decomposition of a univariate polynomial: pairs
 * (factor, multiplicity) with p = c * prod factor^multiplicity.
 */
inline std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(const MultiPoly& p)
{
    if (p.num_vars() != 1)
        throw AlignmentError("squarefree_decomposition expects a univariate polynomial");
    if (p.is_zero())
        throw DegenerateInput("squarefree decomposition of the zero polynomial");
    std::vector<std::pair<MultiPoly, int>> out;
    MultiPoly f = primitive_integer(clear_negative_exponents(p));
    if (f.degree(0) == 0)
        return out;
    MultiPoly fp = f.derivative(0);
    MultiPoly a = gcd(f, fp);
    MultiPoly b = exact_quotient(f, a);
    MultiPoly c = exact_quotient(fp, a);
    MultiPoly d = c - b.derivative(0);
    int i = 1;
    while (b.degree(0) > 0)
    {
        MultiPoly g = gcd(b, d);
        MultiPoly bb = exact_quotient(b, g);
        if (g.degree(0) > 0)
            out.emplace_back(primitive_integer(g), i);
        c = exact_quotient(d, g);
        b = bb;
        d = c - b.derivative(0);
        ++i;
    }
    return out;
}

/** Determinant of a square matrix of polynomials by Bareiss elimination. */
inline MultiPoly determinant(std::vector<std::vector<MultiPoly>> m, const VarList& vars)
{
    const std::size_t n = m.size();
    if (n == 0)
        return MultiPoly(vars, Rational(1));
    bool negate = false;
    MultiPoly prev(vars, Rational(1));
    for (std::size_t k = 0; k + 1 < n; ++k)
    {
        if (m[k][k].is_zero())
        {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero())
                ++swap_row;
            if (swap_row == n)
                return MultiPoly(vars);
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i)
        {
            for (std::size_t j = k + 1; j < n; ++j)
            {
                MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                m[i][j] = exact_quotient(num, prev);
            }
            m[i][k] = MultiPoly(vars);
        }
        prev = m[k][k];
    }
    MultiPoly det = m[n - 1][n - 1];
    return negate ? -det : det;
}

/**
 * Resultant of p and q with respect to var: the Sylvester determinant.
 * Negative exponents are cleared first, which changes the result only by a
 * monomial factor.
 */
inline MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var)
{
    p.check_aligned(q);
    const std::size_t v = p.index_of(var);
    MultiPoly a = clear_negative_exponents(p);
    MultiPoly b = clear_negative_exponents(q);
    const int m = a.is_zero() ? 0 : a.degree(v);
    const int n = b.is_zero() ? 0 : b.degree(v);
    if (m <= 0 || n <= 0)
        throw EliminationError("resultant needs positive degree in '" + var + "' for both inputs");

    auto ca = a.coefficients(v);
    auto cb = b.coefficients(v);
    const std::size_t size = static_cast<std::size_t>(m + n);
    const MultiPoly zero(p.vars());
    std::vector<std::vector<MultiPoly>> syl(size, std::vector<MultiPoly>(size, zero));
    for (int row = 0; row < n; ++row)
        for (auto& [k, c] : ca)
            syl[row][row + (m - k)] = c;
    for (int row = 0; row < m; ++row)
        for (auto& [k, c] : cb)
            syl[n + row][row + (n - k)] = c;
    return determinant(std::move(syl), p.vars());
}

/**
 * Remainder of p modulo m in variable var, where the leading coefficient of
 * m in var is a single term (a unit of the Laurent ring). The division is
 * therefore exact in the coefficient ring.
 */
inline MultiPoly reduce_modulo(const MultiPoly& p, const MultiPoly& m, const std::string& var)
{
    p.check_aligned(m);
    const std::size_t v = p.index_of(var);
    const int dm = m.degree(v);
    const MultiPoly lc = m.leading_coefficient(v);
    if (!lc.is_monomial())
        throw DegenerateInput("reduce_modulo needs a single-term leading coefficient");
    const auto& [le, lcoef] = lc.leading_term();
    Exponents inv_shift(le.size());
    for (std::size_t i = 0; i < le.size(); ++i)
        inv_shift[i] = -le[i];
    inv_shift[v] = 0;
    MultiPoly r = p;
    while (!r.is_zero() && r.degree(v) >= dm)
    {
        const int dr = r.degree(v);
        MultiPoly factor = r.coefficient(v, dr).shifted(inv_shift) * (1 / lcoef);
        Exponents sh(r.num_vars(), 0);
        sh[v] = dr - dm;
        r -= factor * m.shifted(sh);
    }
    return r;
}

}   // namespace knots::polyring

#endif
