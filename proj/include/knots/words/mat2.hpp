/**
 * 2x2 matrices over exact Laurent polynomials or complex numbers.
 */

#ifndef KNOTS_WORDS_MAT2_HPP
#define KNOTS_WORDS_MAT2_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <type_traits>

#include "knots/errors.hpp"
#include "knots/polyring/multipoly.hpp"

namespace knots::words {

/**
 * Per-scalar operations needed by Mat2: zero and one shaped like a sample
 * value (MultiPoly constants must carry the variable list), and the
 * reciprocal of a unit.
 */
template <typename T>
struct ScalarOps;

template <typename R>
struct ScalarOps<std::complex<R>>
{
    using Scalar = std::complex<R>;
    static Scalar zero_like(const Scalar&) { return Scalar(0); }
    static Scalar one_like(const Scalar&) { return Scalar(1); }
    static Scalar reciprocal(const Scalar& x)
    {
        if (x == Scalar(0))
            throw DegenerateInput("matrix is singular");
        return Scalar(1) / x;
    }
};

template <>
struct ScalarOps<polyring::MultiPoly>
{
    using Scalar = polyring::MultiPoly;
    static Scalar zero_like(const Scalar& x) { return Scalar(x.vars()); }
    static Scalar one_like(const Scalar& x) { return Scalar(x.vars(), polyring::Rational(1)); }
    /** Only monomials are units of the Laurent polynomial ring. */
    static Scalar reciprocal(const Scalar& x)
    {
        if (!x.is_monomial() || x.is_zero())
            throw DegenerateInput("determinant is not a unit of the Laurent polynomial ring");
        const auto& [e, c] = *x.terms().begin();
        polyring::Exponents neg(e.size());
        std::transform(e.begin(), e.end(), neg.begin(), [](int k) { return -k; });
        return Scalar::monomial(x.vars(), neg, 1 / polyring::Rational(c));
    }
};

template <typename T>
class Mat2
{
    public:
        using Scalar = T;

        Mat2(T a11, T a12, T a21, T a22)
            : a11(std::move(a11)), a12(std::move(a12)), a21(std::move(a21)), a22(std::move(a22))
        {
        }

        static Mat2 identity_like(const T& sample)
        {
            return Mat2(ScalarOps<T>::one_like(sample), ScalarOps<T>::zero_like(sample),
                        ScalarOps<T>::zero_like(sample), ScalarOps<T>::one_like(sample));
        }

        static Mat2 zero_like(const T& sample)
        {
            T z = ScalarOps<T>::zero_like(sample);
            return Mat2(z, z, z, z);
        }

        T det() const { return a11 * a22 - a12 * a21; }
        T trace() const { return a11 + a22; }

        /** Adjugate; equals the inverse when det = 1. */
        Mat2 adjugate() const { return Mat2(a22, -a12, -a21, a11); }

        Mat2 inverse() const
        {
            T r = ScalarOps<T>::reciprocal(det());
            return Mat2(a22 * r, -(a12 * r), -(a21 * r), a11 * r);
        }

        Mat2& operator+=(const Mat2& o)
        {
            a11 += o.a11;
            a12 += o.a12;
            a21 += o.a21;
            a22 += o.a22;
            return *this;
        }

        Mat2& operator-=(const Mat2& o)
        {
            a11 -= o.a11;
            a12 -= o.a12;
            a21 -= o.a21;
            a22 -= o.a22;
            return *this;
        }

        Mat2& operator*=(const Mat2& o) { return *this = *this * o; }

        friend Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
        friend Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
        friend Mat2 operator-(const Mat2& a) { return Mat2(-a.a11, -a.a12, -a.a21, -a.a22); }

        friend Mat2 operator*(const Mat2& a, const Mat2& b)
        {
            return Mat2(a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
                        a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22);
        }

        friend Mat2 operator*(const T& c, const Mat2& m) { return Mat2(c * m.a11, c * m.a12, c * m.a21, c * m.a22); }

        /** Non-negative integer power by repeated squaring. */
        Mat2 pow(unsigned n) const
        {
            Mat2 result = identity_like(a11);
            Mat2 base = *this;
            while (n > 0)
            {
                if (n & 1u)
                    result = result * base;
                n >>= 1;
                if (n > 0)
                    base = base * base;
            }
            return result;
        }

        /** Apply f entrywise, e.g. to evaluate a symbolic matrix numerically. */
        template <typename F>
        auto map(F&& f) const
        {
            using U = std::invoke_result_t<F&, const T&>;
            return Mat2<U>(f(a11), f(a12), f(a21), f(a22));
        }

        bool operator==(const Mat2&) const = default;

        T a11, a12, a21, a22;
};

using SymbolicMat = Mat2<polyring::MultiPoly>;
using NumericMat = Mat2<std::complex<double>>;

/** Max-entry norm of a numeric matrix. */
template <typename R>
R norm_inf(const Mat2<std::complex<R>>& m)
{
    return std::max({std::abs(m.a11), std::abs(m.a12), std::abs(m.a21), std::abs(m.a22)});
}

/** Evaluate every entry of a symbolic matrix at a point (values ordered like the variable list). */
inline NumericMat evaluate(const SymbolicMat& m, std::span<const std::complex<double>> point)
{
    return m.map([&](const polyring::MultiPoly& p) { return p.evaluate<double>(point); });
}

}   // namespace knots::words

#endif
