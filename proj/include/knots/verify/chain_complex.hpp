/**
 * Reidemeister torsion of a one-relator presentation complex computed from
 * the full twisted chain complex, independently of the Wada quotient.
 *
 * With row vectors and right multiplication by rho, the complex of the
 * presentation <x, y | r> with C^2 coefficients is
 *
 *     C^2 --D2--> C^4 --D1--> C^2,
 *     D2 = ( J_x | J_y ) (2 x 4),   D1 = ( X - I ; Y - I ) (4 x 2),
 *
 * where J_g = rho(dr/dg). For an acyclic complex the torsion is the
 * determinant of the 4 x 4 matrix stacking the rows of D2 over any two rows
 * h1, h2 with h_i D1 = e_i; the value does not depend on the choice of lift.
 */

#ifndef KNOTS_VERIFY_CHAIN_COMPLEX_HPP
#define KNOTS_VERIFY_CHAIN_COMPLEX_HPP

#include <complex>
#include <cstdlib>

#include <Eigen/Dense>

#include "knots/errors.hpp"
#include "knots/words/fox.hpp"
#include "knots/words/group_word.hpp"

namespace knots::verify {

using cd = std::complex<double>;

struct ChainComplexTorsion
{
    cd value = 0;
    bool acyclic = false;
    double complex_defect = 0;   // |D2 D1|, zero for a representation
};

namespace detail {

inline Eigen::Matrix2cd to_eigen(const words::NumericMat& m)
{
    Eigen::Matrix2cd e;
    e << m.a11, m.a12, m.a21, m.a22;
    return e;
}

/**
 * rho(dr/dg) accumulated letter by letter: a letter g contributes the
 * current prefix, a letter g^-1 contributes minus the prefix times g^-1.
 */
inline Eigen::Matrix2cd fox_jacobian(const words::GroupWord& r, const std::string& g,
                                     const words::Assignment<cd>& a)
{
    Eigen::Matrix2cd out = Eigen::Matrix2cd::Zero();
    Eigen::Matrix2cd prefix = Eigen::Matrix2cd::Identity();
    for (const auto& [h, e] : r.letters())
    {
        auto it = a.find(h);
        if (it == a.end())
            throw BindingError("generator '" + h + "' has no assigned matrix");
        const Eigen::Matrix2cd m = to_eigen(it->second);
        const Eigen::Matrix2cd minv = m.inverse();
        for (int k = 0; k < std::abs(e); ++k)
        {
            if (e > 0)
            {
                if (h == g)
                    out += prefix;
                prefix = prefix * m;
            }
            else
            {
                prefix = prefix * minv;
                if (h == g)
                    out -= prefix;
            }
        }
    }
    return out;
}

inline int rank(const Eigen::MatrixXcd& m, double tol)
{
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    const double cutoff = tol * std::max(1.0, sv.size() ? sv(0) : 0.0);
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff)
            ++r;
    return r;
}

}   // namespace detail

/** Torsion of the presentation complex of <x, y | relator> at the numeric representation a. */
inline ChainComplexTorsion chain_complex_torsion(const words::GroupWord& relator, const words::Assignment<cd>& a,
                                                 double rank_tol = 1e-8)
{
    Eigen::MatrixXcd d2(2, 4), d1(4, 2);
    d2 << detail::fox_jacobian(relator, "x", a), detail::fox_jacobian(relator, "y", a);
    const Eigen::Matrix2cd I = Eigen::Matrix2cd::Identity();
    d1 << detail::to_eigen(a.at("x")) - I, detail::to_eigen(a.at("y")) - I;

    ChainComplexTorsion out;
    out.complex_defect = (d2 * d1).cwiseAbs().maxCoeff();
    if (detail::rank(d2, rank_tol) < 2 || detail::rank(d1, rank_tol) < 2)
        return out;
    const Eigen::MatrixXcd lift = d1.completeOrthogonalDecomposition().pseudoInverse();   // 2 x 4, lift * d1 = I
    Eigen::Matrix4cd m;
    m << d2, lift;
    out.value = m.determinant();
    out.acyclic = true;
    return out;
}

}   // namespace knots::verify

#endif
