/**
 * Twisted homology of the torus with coefficients in C^2 through a
 * representation of Z^2 = <x, y | xyx^-1y^-1>.
 *
 * The cellular complex is C^2 -> C^4 -> C^2 with
 *
 *     d2 = ( -(Y - I) ; X - I )   (4 x 2),     d1 = ( X - I , Y - I )   (2 x 4).
 */

#ifndef KNOTS_SPLICE_TORUS_HPP
#define KNOTS_SPLICE_TORUS_HPP

#include <array>
#include <cmath>
#include <complex>

#include <Eigen/Dense>

#include "knots/errors.hpp"
#include "knots/words/mat2.hpp"

namespace knots::splice {

using cd = std::complex<double>;
using words::NumericMat;

struct TorusRep
{
    NumericMat X;   // meridian of the gluing torus
    NumericMat L;   // longitude of the gluing torus
};

struct TorusHomology
{
    bool acyclic = false;
    std::array<int, 3> dims{0, 0, 0};   // dim H_0, H_1, H_2
    bool parabolic = false;             // tr X, tr L, tr XL all equal to 2
};

namespace detail {

inline Eigen::Matrix2cd to_eigen(const NumericMat& m)
{
    Eigen::Matrix2cd e;
    e << m.a11, m.a12, m.a21, m.a22;
    return e;
}

/** Numeric rank: singular values above tol * max(1, largest singular value). */
inline int numeric_rank(const Eigen::MatrixXcd& m, double tol)
{
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0)
        return 0;
    const double cutoff = tol * std::max(1.0, sv(0));
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff)
            ++r;
    return r;
}

}   // namespace detail

/** The parabolic test: every element of the image has trace 2. */
inline bool is_parabolic(const TorusRep& rep, double tol = 1e-9)
{
    return std::abs(rep.X.trace() - 2.0) <= tol && std::abs(rep.L.trace() - 2.0) <= tol &&
           std::abs((rep.X * rep.L).trace() - 2.0) <= tol;
}

/**
 * Homology dimensions from numeric ranks of the boundary maps; the rank
 * verdict is returned next to the parabolic test so callers can compare them.
 */
inline TorusHomology torus_acyclicity(const TorusRep& rep, double rank_tol = 1e-8, double commute_tol = 1e-8)
{
    const double scale = std::max(1.0, words::norm_inf(rep.X) * words::norm_inf(rep.L));
    if (words::norm_inf(rep.X * rep.L - rep.L * rep.X) > commute_tol * scale)
        throw InvalidTorusRepresentation("torus representation: meridian and longitude images do not commute");

    const Eigen::Matrix2cd I = Eigen::Matrix2cd::Identity();
    const Eigen::Matrix2cd xm = detail::to_eigen(rep.X) - I;
    const Eigen::Matrix2cd lm = detail::to_eigen(rep.L) - I;
    Eigen::MatrixXcd d2(4, 2), d1(2, 4);
    d2 << -lm, xm;
    d1 << xm, lm;

    const int r2 = detail::numeric_rank(d2, rank_tol);
    const int r1 = detail::numeric_rank(d1, rank_tol);
    TorusHomology h;
    h.dims = {2 - r1, 4 - r1 - r2, 2 - r2};
    h.acyclic = h.dims == std::array<int, 3>{0, 0, 0};
    h.parabolic = is_parabolic(rep);
    return h;
}

}   // namespace knots::splice

#endif
