/**
 * The coprimality test gcd(f1(L, M), f2(M, L)) = 1 behind the finiteness
 * criterion for splices, decided first by Newton-polygon slopes and, when
 * slopes are inconclusive, by an exact gcd.
 */

#ifndef KNOTS_APOLY_CRITERION_HPP
#define KNOTS_APOLY_CRITERION_HPP

#include <optional>
#include <string>

#include "knots/apoly/apolynomial.hpp"
#include "knots/apoly/newton.hpp"
#include "knots/polyring/algorithms.hpp"

namespace knots::apoly {

enum class Verdict
{
    certified_coprime_by_slopes,
    coprime_by_gcd,
    not_coprime,
};

inline std::string to_string(Verdict v)
{
    switch (v)
    {
        case Verdict::certified_coprime_by_slopes:
            return "certified_coprime_by_slopes";
        case Verdict::coprime_by_gcd:
            return "coprime_by_gcd";
        case Verdict::not_coprime:
            return "not_coprime";
    }
    return "unknown";
}

struct CriterionResult
{
    Verdict verdict = Verdict::not_coprime;
    SlopeSet slopes1;             // SS(N(f1))
    SlopeSet slopes2;             // SS(N(f2))
    SlopeSet slopes2_inverted;    // SS(N(f2))^-1 = SS(N(f2^T))
    SlopeSet common;              // SS(N(f1)) intersected with SS(N(f2))^-1
    std::optional<MultiPoly> gcd; // set when the gcd route ran

    bool coprime() const { return verdict != Verdict::not_coprime; }
    /** "slopes" when the slope test certified the answer, otherwise "gcd". */
    std::string route() const { return verdict == Verdict::certified_coprime_by_slopes ? "slopes" : "gcd"; }
};

/**
 * Decide whether f1(L, M) and f2^T(L, M) = f2(M, L) are coprime. Disjoint
 * slope sets force the gcd to be a monomial; together with the absence of a
 * shared monomial factor this certifies coprimality without computing it.
 */
inline CriterionResult coprimality_criterion(const MultiPoly& f1_in, const MultiPoly& f2_in)
{
    if (f1_in.is_zero() || f2_in.is_zero())
        throw DegenerateInput("coprimality criterion needs nonzero polynomials");
    const MultiPoly f1 = f1_in.with_vars(lm_vars());
    const MultiPoly f2 = f2_in.with_vars(lm_vars());
    const MultiPoly f2t = transpose(f2);

    CriterionResult r;
    r.slopes1 = newton_polygon(f1).slopes();
    r.slopes2 = newton_polygon(f2).slopes();
    r.slopes2_inverted = invert(r.slopes2);
    r.common = set_intersection(r.slopes1, r.slopes2_inverted);

    const auto m1 = polyring::min_exponents(f1), m2 = polyring::min_exponents(f2t);
    const bool shared_monomial = (m1[0] > 0 && m2[0] > 0) || (m1[1] > 0 && m2[1] > 0);
    if (r.common.empty() && !shared_monomial)
    {
        r.verdict = Verdict::certified_coprime_by_slopes;
        return r;
    }
    r.gcd = polyring::gcd(f1, f2t);
    r.verdict = r.gcd->is_constant() ? Verdict::coprime_by_gcd : Verdict::not_coprime;
    return r;
}

}   // namespace knots::apoly

#endif
