/**
 * Certified numeric roots of univariate polynomials.
 *
 * The solver is the Aberth-Ehrlich simultaneous iteration, started from a
 * randomly rotated circle and finished with Newton polishing in long double.
 * Exact inputs are split into squarefree factors first so multiplicities are
 * exact and every iteration runs on a polynomial with simple roots.
 */

#ifndef KNOTS_POLYRING_ROOTS_HPP
#define KNOTS_POLYRING_ROOTS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "knots/polyring/algorithms.hpp"
#include "knots/polyring/multipoly.hpp"

namespace knots::polyring {

struct ComplexRoot
{
    std::complex<double> value;
    double residual = 0;        // |p(z)| / sum |a_k| |z|^k
    int multiplicity_hint = 1;
};

struct RootSolverOptions
{
    double certify_tolerance = 1e-9;
    double merge_distance = 1e-8;
    int max_iterations = 10000;
    std::uint64_t seed = 0x5eed;
};

namespace detail {

using cld = std::complex<long double>;

// Horner evaluation of p and p' with ascending coefficients.
inline void horner(std::span<const cld> a, cld z, cld& p, cld& dp)
{
    p = 0;
    dp = 0;
    for (std::size_t k = a.size(); k-- > 0;)
    {
        dp = dp * z + p;
        p = p * z + a[k];
    }
}

inline long double relative_residual(std::span<const cld> a, cld z)
{
    cld p = 0;
    long double scale = 0;
    long double r = std::abs(z);
    long double rk = 1;
    for (std::size_t k = 0; k < a.size(); ++k)
    {
        scale += std::abs(a[k]) * rk;
        rk *= r;
    }
    for (std::size_t k = a.size(); k-- > 0;)
        p = p * z + a[k];
    return scale == 0 ? 0 : std::abs(p) / scale;
}

// Roots of a polynomial with (numerically) simple roots; a has a nonzero top coefficient.
inline std::vector<cld> aberth(std::span<const cld> a, const RootSolverOptions& opt)
{
    const std::size_t n = a.size() - 1;
    std::vector<cld> z(n);
    if (n == 0)
        return z;
    if (n == 1)
    {
        z[0] = -a[0] / a[1];
        return z;
    }

    // Starting radius: geometric mean of root moduli when a_0 != 0, else
    // the Cauchy-type bound.
    long double radius = 1;
    if (std::abs(a[0]) > 0)
        radius = std::pow(std::abs(a[0]) / std::abs(a[n]), 1.0L / n);
    else
    {
        long double m = 0;
        for (std::size_t k = 0; k < n; ++k)
            m = std::max(m, std::abs(a[k] / a[n]));
        radius = std::max(1.0L, std::min(m, 1e6L));
    }
    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<long double> jitter(-0.25L, 0.25L);
    const long double offset = 0.4L + jitter(rng);
    for (std::size_t k = 0; k < n; ++k)
    {
        long double angle = 2 * std::numbers::pi_v<long double> * (k + offset + 0.2L * jitter(rng)) / n;
        z[k] = std::polar(radius * (1 + 0.05L * jitter(rng)), angle);
    }

    std::vector<bool> done(n, false);
    for (int iter = 0; iter < opt.max_iterations; ++iter)
    {
        bool all_done = true;
        for (std::size_t i = 0; i < n; ++i)
        {
            if (done[i])
                continue;
            cld p, dp;
            horner(a, z[i], p, dp);
            if (p == cld(0))
            {
                done[i] = true;
                continue;
            }
            cld ratio = p / dp;
            cld sum = 0;
            for (std::size_t j = 0; j < n; ++j)
                if (j != i)
                    sum += 1.0L / (z[i] - z[j]);
            cld w = ratio / (1.0L - ratio * sum);
            if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
                w = ratio;
            z[i] -= w;
            if (std::abs(w) <= 4e-17L * (1 + std::abs(z[i])))
                done[i] = true;
            else
                all_done = false;
        }
        if (all_done)
            break;
    }

    // Newton polishing.
    for (auto& root : z)
    {
        for (int k = 0; k < 8; ++k)
        {
            cld p, dp;
            horner(a, root, p, dp);
            if (dp == cld(0) || p == cld(0))
                break;
            cld step = p / dp;
            root -= step;
            if (std::abs(step) <= 1e-19L * (1 + std::abs(root)))
                break;
        }
    }
    return z;
}

// Complex Newton refinement in GMP floating point against exact rational
// coefficients; recovers digits lost to cancellation in long double Horner
// evaluation when root clusters make the polynomial ill-conditioned.
inline cld polish_multiprecision(const std::vector<Rational>& exact, cld z0, int steps = 30)
{
    constexpr mp_bitcnt_t bits = 256;
    mpf_class zr(static_cast<double>(z0.real()), bits), zi(static_cast<double>(z0.imag()), bits);
    // Low-order bits of the long double start value.
    zr += mpf_class(static_cast<double>(z0.real() - static_cast<long double>(static_cast<double>(z0.real()))), bits);
    zi += mpf_class(static_cast<double>(z0.imag() - static_cast<long double>(static_cast<double>(z0.imag()))), bits);
    std::vector<mpf_class> a;
    a.reserve(exact.size());
    for (const auto& c : exact)
        a.emplace_back(c, bits);
    const mpf_class tiny("1e-60", bits);
    for (int it = 0; it < steps; ++it)
    {
        mpf_class pr(0, bits), pi(0, bits), dr(0, bits), di(0, bits), t(0, bits);
        for (std::size_t k = a.size(); k-- > 0;)
        {
            // dp = dp*z + p ; p = p*z + a_k
            t = dr * zr - di * zi + pr;
            di = dr * zi + di * zr + pi;
            dr = t;
            t = pr * zr - pi * zi + a[k];
            pi = pr * zi + pi * zr;
            pr = t;
        }
        mpf_class den = dr * dr + di * di;
        if (den == 0)
            break;
        mpf_class sr = (pr * dr + pi * di) / den;
        mpf_class si = (pi * dr - pr * di) / den;
        zr -= sr;
        zi -= si;
        if (abs(sr) + abs(si) <= tiny * (1 + abs(zr) + abs(zi)))
            break;
    }
    return {static_cast<long double>(zr.get_d()) + static_cast<long double>(mpf_class(zr - zr.get_d()).get_d()),
            static_cast<long double>(zi.get_d()) + static_cast<long double>(mpf_class(zi - zi.get_d()).get_d())};
}

inline std::vector<ComplexRoot> merge_clusters(std::vector<ComplexRoot> roots, double distance)
{
    std::sort(roots.begin(), roots.end(), [](const ComplexRoot& x, const ComplexRoot& y) {
        if (x.value.real() != y.value.real())
            return x.value.real() < y.value.real();
        return x.value.imag() < y.value.imag();
    });
    std::vector<ComplexRoot> out;
    std::vector<bool> used(roots.size(), false);
    for (std::size_t i = 0; i < roots.size(); ++i)
    {
        if (used[i])
            continue;
        ComplexRoot acc = roots[i];
        std::complex<double> sum = roots[i].value * double(roots[i].multiplicity_hint);
        int mult = roots[i].multiplicity_hint;
        for (std::size_t j = i + 1; j < roots.size(); ++j)
        {
            if (!used[j] && std::abs(roots[j].value - roots[i].value) <= distance)
            {
                used[j] = true;
                sum += roots[j].value * double(roots[j].multiplicity_hint);
                mult += roots[j].multiplicity_hint;
                acc.residual = std::max(acc.residual, roots[j].residual);
            }
        }
        acc.value = sum / double(mult);
        acc.multiplicity_hint = mult;
        out.push_back(acc);
    }
    return out;
}

}   // namespace detail

/**
 * Roots of a polynomial given by ascending complex coefficients. Leading
 * zero coefficients are dropped. Roots closer than the merge distance are
 * merged into one entry with a multiplicity hint.
 */
inline std::vector<ComplexRoot> solve_roots(std::span<const std::complex<double>> ascending,
                                            const RootSolverOptions& opt = {})
{
    std::vector<detail::cld> a(ascending.begin(), ascending.end());
    while (!a.empty() && a.back() == detail::cld(0))
        a.pop_back();
    if (a.empty())
        throw DegenerateInput("root finding on the zero polynomial");
    if (a.size() == 1)
        throw DegenerateInput("root finding on a constant polynomial");

    auto z = detail::aberth(a, opt);
    std::vector<ComplexRoot> roots;
    std::vector<double> residuals;
    bool failed = false;
    for (const auto& r : z)
    {
        double res = static_cast<double>(detail::relative_residual(a, r));
        residuals.push_back(res);
        if (!(res <= opt.certify_tolerance))
            failed = true;
        roots.push_back({std::complex<double>(double(r.real()), double(r.imag())), res, 1});
    }
    if (failed)
        throw SolverFailure("root solver did not reach the certification tolerance", residuals);
    return detail::merge_clusters(std::move(roots), opt.merge_distance);
}

/**
 * Roots of an exact univariate polynomial. Multiplicities come from the
 * exact squarefree decomposition; residuals are measured against p itself.
 */
inline std::vector<ComplexRoot> solve_roots(const MultiPoly& p, const RootSolverOptions& opt = {})
{
    if (p.num_vars() != 1)
        throw AlignmentError("solve_roots expects a univariate polynomial");
    if (p.is_zero())
        throw DegenerateInput("root finding on the zero polynomial");
    MultiPoly base = clear_negative_exponents(p);
    if (base.degree(0) < 1)
        throw DegenerateInput("root finding on a constant polynomial");

    auto to_coeffs = [](const MultiPoly& f) {
        std::vector<detail::cld> c(static_cast<std::size_t>(f.degree(0)) + 1, 0);
        for (const auto& [e, v] : f.terms())
            c[static_cast<std::size_t>(e[0])] = static_cast<long double>(v.get_d());
        return c;
    };
    const auto full = to_coeffs(base);

    std::vector<ComplexRoot> roots;
    std::vector<double> residuals;
    bool failed = false;
    for (const auto& [factor, mult] : squarefree_decomposition(base))
    {
        auto c = to_coeffs(factor);
        std::vector<Rational> exact(c.size(), Rational(0));
        for (const auto& [e, v] : factor.terms())
            exact[static_cast<std::size_t>(e[0])] = v;
        for (auto r : detail::aberth(c, opt))
        {
            r = detail::polish_multiprecision(exact, r);
            double res = static_cast<double>(detail::relative_residual(full, r));
            residuals.push_back(res);
            if (!(res <= opt.certify_tolerance))
                failed = true;
            roots.push_back({std::complex<double>(double(r.real()), double(r.imag())), res, mult});
        }
    }
    if (failed)
        throw SolverFailure("root solver did not reach the certification tolerance", residuals);
    return detail::merge_clusters(std::move(roots), opt.merge_distance);
}

}   // namespace knots::polyring

#endif
