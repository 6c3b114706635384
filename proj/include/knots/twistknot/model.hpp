/**
 * The twist knot J(2,2q) and its nonabelian SL(2,C) representations.
 *
 * The knot group is <x, y | z^q x = y z^q> with z = [y, x^-1]. Irreducible
 * representations are, up to conjugation,
 *
 *     x -> X = (s 1; 0 1/s),   y -> Y = (s 0; -t 1/s),
 *
 * with (s, t) on the Riley curve phi_q(s, t) = z11 + (1/s - s) z12 = 0 where
 * Z^q = (z11 z12; z21 z22). The preferred longitude commuting with x is
 * lambda = ztilde^q z^q with ztilde = [x, y^-1].
 */

#ifndef KNOTS_TWISTKNOT_MODEL_HPP
#define KNOTS_TWISTKNOT_MODEL_HPP

#include <complex>
#include <string>
#include <vector>

#include "knots/errors.hpp"
#include "knots/polyring/algorithms.hpp"
#include "knots/polyring/chebyshev.hpp"
#include "knots/polyring/multipoly.hpp"
#include "knots/polyring/roots.hpp"
#include "knots/words/fox.hpp"
#include "knots/words/group_word.hpp"
#include "knots/words/mat2.hpp"

namespace knots::twistknot {

using polyring::MultiPoly;
using polyring::Rational;
using polyring::VarList;
using words::GroupWord;
using words::NumericMat;
using words::SymbolicMat;

/** Variables of the symbolic representation: s (meridian eigenvalue) and t. */
inline const VarList& st_vars()
{
    static const VarList vars{"s", "t"};
    return vars;
}

/** Trace coordinates of the Riley curve: xi = s + 1/s and t. */
inline const VarList& xit_vars()
{
    static const VarList vars{"xi", "t"};
    return vars;
}

struct TwistKnotModel
{
    int q = 0;
    SymbolicMat X;
    SymbolicMat Y;
    GroupWord z_word;        // [y, x^-1]
    GroupWord ztilde_word;   // [x, y^-1]
    GroupWord lambda_word;   // ztilde^q z^q
    GroupWord relator;       // z^q x z^-q y^-1

    words::Assignment<MultiPoly> assignment() const { return {{"x", X}, {"y", Y}}; }

    /** Abbreviations for word literals: "z" and "zt". */
    std::map<std::string, GroupWord> abbreviations() const { return {{"z", z_word}, {"zt", ztilde_word}}; }
};

/** Build the model for J(2,2q); q = 0 is the unknot and is rejected. */
inline TwistKnotModel build_model(int q)
{
    if (q == 0)
        throw UnknotError("q = 0 gives the unknot, which has no irreducible representations");
    const VarList& v = st_vars();
    const MultiPoly s = MultiPoly::variable(v, "s");
    const MultiPoly sinv = MultiPoly::variable(v, "s", -1);
    const MultiPoly t = MultiPoly::variable(v, "t");
    const MultiPoly one(v, Rational(1)), zero(v);

    const GroupWord x = GroupWord::generator("x"), y = GroupWord::generator("y");
    TwistKnotModel m{q,
                     SymbolicMat(s, one, zero, sinv),
                     SymbolicMat(s, zero, -t, sinv),
                     words::commutator(y, x.inverse()),
                     words::commutator(x, y.inverse()),
                     {},
                     {}};
    m.lambda_word = m.ztilde_word.pow(q) * m.z_word.pow(q);
    m.relator = words::parse_word("z^q x z^-q y^-1", m.abbreviations(), q);
    return m;
}

/** Z^q evaluated symbolically. */
inline SymbolicMat z_power(const TwistKnotModel& m)
{
    return words::evaluate_word(m.z_word.pow(m.q), m.assignment());
}

/**
 * Riley polynomial in (s, t): z11 + (1/s - s) z12 made integral and
 * primitive, with positive leading coefficient in t.
 */
inline MultiPoly riley_polynomial(const TwistKnotModel& m)
{
    const SymbolicMat zq = z_power(m);
    const VarList& v = st_vars();
    MultiPoly phi = zq.a11 + (MultiPoly::variable(v, "s", -1) - MultiPoly::variable(v, "s")) * zq.a12;
    phi = polyring::primitive_integer(phi);
    return polyring::normalize_sign_in(phi, "t");
}

/** The Riley polynomial in the trace coordinates (xi, t). */
inline MultiPoly riley_xi(const TwistKnotModel& m)
{
    return polyring::to_trace_coordinate(riley_polynomial(m), "s", "xi");
}

/** tr rho(xy) in (xi, t). */
inline MultiPoly trace_xy(const TwistKnotModel& m)
{
    return polyring::to_trace_coordinate((m.X * m.Y).trace(), "s", "xi");
}

struct LongitudeData
{
    SymbolicMat matrix;        // rho(lambda) in (s, t)
    MultiPoly eigenvalue;      // (1,1)-entry reduced modulo phi_q
    MultiPoly trace;           // tr rho(lambda) reduced modulo phi_q, in (s, t)
    MultiPoly trace_xi;        // the reduced trace in (xi, t)
    bool upper_triangular;     // (2,1)-entry reduces to zero modulo phi_q
};

/**
 * The longitude image and its reductions modulo the Riley polynomial. The
 * leading t-coefficient of phi_q is a monomial in s, so reduction stays in
 * the Laurent ring.
 */
inline LongitudeData longitude(const TwistKnotModel& m)
{
    const MultiPoly phi = riley_polynomial(m);
    SymbolicMat l = words::evaluate_word(m.lambda_word, m.assignment());
    MultiPoly eig = polyring::reduce_modulo(l.a11, phi, "t");
    MultiPoly tr = polyring::reduce_modulo(l.trace(), phi, "t");
    MultiPoly lower = polyring::reduce_modulo(l.a21, phi, "t");
    MultiPoly tr_xi = polyring::to_trace_coordinate(tr, "s", "xi");
    return {std::move(l), std::move(eig), std::move(tr), std::move(tr_xi), lower.is_zero()};
}

/** Variables of the boundary-trace relation: xi_l = tr rho(lambda), xi_m = tr rho(mu). */
inline const VarList& xi_relation_vars()
{
    static const VarList vars{"xi_l", "xi_m"};
    return vars;
}

struct XiRelation
{
    MultiPoly relation;          // R(xi_l, xi_m)
    bool fallback_used = false;  // elimination collapsed; squarefree Riley part used instead
};

/**
 * Polynomial R(xi_l, xi_m) vanishing on the (longitude trace, meridian trace)
 * pairs of irreducible characters. When the reduced longitude trace is free
 * of t it is R = xi_l - tr(xi_m); otherwise t is eliminated by a resultant.
 * The result is squarefree and primitive with positive leading coefficient
 * (lexicographic, xi_l most significant) and carries no monomial factor.
 */
inline XiRelation xi_relation_full(const TwistKnotModel& m)
{
    const LongitudeData lon = longitude(m);
    const VarList v{"xi_l", "xi_m", "t"};
    const MultiPoly tr = lon.trace_xi.renamed("xi", "xi_m").with_vars(v);
    const MultiPoly xi_l = MultiPoly::variable(v, "xi_l");
    XiRelation out;
    MultiPoly rel(v);
    if (tr.degree("t") <= 0)
    {
        rel = xi_l - tr;
    }
    else
    {
        const MultiPoly phi = riley_xi(m).renamed("xi", "xi_m").with_vars(v);
        rel = polyring::resultant(phi, xi_l - tr, "t");
        if (rel.is_zero())
        {
            rel = polyring::squarefree_part(phi);
            out.fallback_used = true;
        }
        else
        {
            rel = polyring::squarefree_part(rel);
        }
    }
    if (!out.fallback_used)
        rel = rel.with_vars(xi_relation_vars());
    rel = polyring::strip_monomial(rel).second;
    rel = polyring::primitive_integer(rel);
    out.relation = std::move(rel);
    return out;
}

inline MultiPoly xi_relation(const TwistKnotModel& m)
{
    return xi_relation_full(m).relation;
}

// ---------------------------------------------------------------------------
// Numeric evaluation on the character variety.

using cd = std::complex<double>;

/** Numeric X, Y at (s, t). */
inline words::Assignment<cd> numeric_generators(cd s, cd t)
{
    return {{"x", NumericMat(s, 1.0, 0.0, 1.0 / s)}, {"y", NumericMat(s, 0.0, -t, 1.0 / s)}};
}

/** Ascending complex coefficients in t of a polynomial in (s, t) at a numeric s. */
inline std::vector<cd> t_coefficients(const MultiPoly& p_st, cd s)
{
    const std::size_t ti = p_st.index_of("t"), si = p_st.index_of("s");
    const int deg = std::max(0, p_st.degree(ti));
    std::vector<cd> out(static_cast<std::size_t>(deg) + 1, 0.0);
    for (const auto& [e, c] : p_st.terms())
        out[static_cast<std::size_t>(e[ti])] += c.get_d() * std::pow(s, e[si]);
    return out;
}

/** Roots t of phi_q(s, t) = 0 at a fixed numeric s (certified by the root solver). */
inline std::vector<cd> riley_t_roots(const MultiPoly& phi, cd s, const polyring::RootSolverOptions& opt = {})
{
    std::vector<cd> out;
    for (const auto& r : polyring::solve_roots(t_coefficients(phi, s), opt))
        for (int k = 0; k < r.multiplicity_hint; ++k)
            out.push_back(r.value);
    return out;
}

/** The longitude matrix at numeric generators. */
inline NumericMat longitude_numeric(const TwistKnotModel& m, const words::Assignment<cd>& a)
{
    return words::evaluate_word(m.lambda_word, a);
}

}   // namespace knots::twistknot

#endif
