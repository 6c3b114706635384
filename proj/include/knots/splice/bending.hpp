/**
 * Bending of a splice character: conjugating the first side by elements
 * A_a of the commutant of its boundary-torus image.
 */

#ifndef KNOTS_SPLICE_BENDING_HPP
#define KNOTS_SPLICE_BENDING_HPP

#include <cmath>
#include <complex>

#include "knots/errors.hpp"
#include "knots/twistknot/model.hpp"
#include "knots/words/mat2.hpp"

namespace knots::splice {

using cd = std::complex<double>;
using words::NumericMat;

struct BendingResult
{
    NumericMat A;              // (a, (a - 1/a)/(s1 - 1/s1); 0, 1/a)
    NumericMat Y1_conjugated;  // A Y1 A^-1
    cd trace;                  // tr(A Y1 A^-1 X2), by matrix products
    cd closed_form;            // s1 s2 + 1/(s1 s2) + {((s2 - 1/s2)/(s1 - 1/s1))(1/a^2 - 1) - c^2/a^2} t1
    cd mixed_trace;            // tr(A Y1 A^-1 Y2): varies with a on a genuine character
    double meridian_defect;    // |A X1 A^-1 - X1|
    double longitude_defect;   // |A L1 A^-1 - L1|
};

/** The commutant element A_a of X1 = (s1, 1; 0, 1/s1). */
inline NumericMat commutant(cd s1, cd a)
{
    if (std::abs(s1 - 1.0) <= 1e-12 || std::abs(s1 + 1.0) <= 1e-12)
        throw DegenerateCommutant("s1 = +-1: the commutant of the meridian image is not the bending family");
    if (a == cd(0))
        throw PreconditionError("bending parameter a must be nonzero");
    return NumericMat(a, (a - 1.0 / a) / (s1 - 1.0 / s1), 0.0, 1.0 / a);
}

/**
 * Bend the first side of a splice character by A_a. The first side is the
 * standard representation of model1 at (s1, t1); the second side is
 * X2 = (s2, c^2; 0, 1/s2), Y2 = (s2, 0; -t2/c^2, 1/s2).
 *
 * On a glued character X2 = L1, and L1 lies in the same one-parameter group
 * as A_a, so tr(A Y1 A^-1 X2) does not actually move with a (its closed form
 * has (s2 - 1/s2)/(s1 - 1/s1) = c^2 there). The trace that detects the
 * deformation mixes both sides' second generators: tr(A Y1 A^-1 Y2).
 */
inline BendingResult bending_family(const twistknot::TwistKnotModel& model1, cd s1, cd t1, cd s2, cd t2, cd c_squared,
                                    cd a)
{
    if (c_squared == cd(0))
        throw PreconditionError("bending needs c^2 != 0");
    BendingResult r{commutant(s1, a), NumericMat(0, 0, 0, 0), 0, 0, 0, 0, 0};
    const NumericMat Ainv = r.A.inverse();
    const auto side1 = twistknot::numeric_generators(s1, t1);
    const NumericMat X1 = side1.at("x"), Y1 = side1.at("y");
    const NumericMat L1 = twistknot::longitude_numeric(model1, side1);
    const NumericMat X2(s2, c_squared, 0.0, 1.0 / s2);
    const NumericMat Y2(s2, 0.0, -t2 / c_squared, 1.0 / s2);

    r.Y1_conjugated = r.A * Y1 * Ainv;
    r.trace = (r.Y1_conjugated * X2).trace();
    r.mixed_trace = (r.Y1_conjugated * Y2).trace();
    r.closed_form = s1 * s2 + 1.0 / (s1 * s2) +
                    (((s2 - 1.0 / s2) / (s1 - 1.0 / s1)) * (1.0 / (a * a) - 1.0) - c_squared / (a * a)) * t1;
    r.meridian_defect = words::norm_inf(r.A * X1 * Ainv - X1);
    r.longitude_defect = words::norm_inf(r.A * L1 * Ainv - L1);
    return r;
}

/**
 * Symbolic form of the bending trace in the Laurent ring over
 * (a, k, s1, s2, t1, c2), where A = (a, k; 0, 1/a) with k standing for
 * (a - 1/a)/(s1 - 1/s1). Returns tr(A Y1 A^-1 X2) minus the closed form
 * s1 s2 + 1/(s1 s2) + (-(s2 - 1/s2) k/a - c2/a^2) t1; substituting k gives the
 * formula used by bending_family. The difference is identically zero.
 */
inline polyring::MultiPoly bending_trace_defect()
{
    using polyring::MultiPoly;
    using polyring::Rational;
    const polyring::VarList v{"a", "k", "s1", "s2", "t1", "c2"};
    auto var = [&](const char* n, int e = 1) { return MultiPoly::variable(v, n, e); };
    const MultiPoly zero(v), one(v, Rational(1));
    const words::SymbolicMat A(var("a"), var("k"), zero, var("a", -1));
    const words::SymbolicMat Y1(var("s1"), zero, -var("t1"), var("s1", -1));
    const words::SymbolicMat X2(var("s2"), var("c2"), zero, var("s2", -1));
    const MultiPoly tr = (A * Y1 * A.inverse() * X2).trace();
    const MultiPoly closed = var("s1") * var("s2") + var("s1", -1) * var("s2", -1) +
                             (-(var("s2") - var("s2", -1)) * var("k") * var("a", -1) - var("c2") * var("a", -2)) * var("t1");
    return tr - closed;
}

}   // namespace knots::splice

#endif
