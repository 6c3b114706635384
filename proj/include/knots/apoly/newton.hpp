/**
 * Newton polygons of two-variable polynomials, their side slopes and
 * Minkowski sums.
 *
 * A polynomial f(L, M) = sum a_ij L^i M^j has support points (i, j); the
 * slope of a side from (i1, j1) to (i2, j2) is (j2 - j1) / (i2 - i1), with
 * vertical sides having slope infinity.
 */

#ifndef KNOTS_APOLY_NEWTON_HPP
#define KNOTS_APOLY_NEWTON_HPP

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "knots/errors.hpp"
#include "knots/polyring/multipoly.hpp"

namespace knots::apoly {

using polyring::MultiPoly;
using polyring::Rational;

struct LatticePoint
{
    long long x = 0;
    long long y = 0;

    auto operator<=>(const LatticePoint&) const = default;
    bool operator==(const LatticePoint&) const = default;

    friend LatticePoint operator+(LatticePoint a, LatticePoint b) { return {a.x + b.x, a.y + b.y}; }
};

/** A rational number or infinity. */
class Slope
{
    public:
        static Slope infinity() { return Slope(true, Rational(0)); }
        static Slope finite(Rational v)
        {
            v.canonicalize();
            return Slope(false, std::move(v));
        }

        /** Slope dy/dx of a lattice direction (not both zero). */
        static Slope of(long long dx, long long dy)
        {
            if (dx == 0 && dy == 0)
                throw DegenerateInput("slope of a zero vector");
            if (dx == 0)
                return infinity();
            return finite(Rational(mpz_class(std::to_string(dy)), mpz_class(std::to_string(dx))));
        }

        bool is_infinite() const { return infinite_; }
        const Rational& value() const { return value_; }

        /** Reciprocal with the conventions 1/0 = infinity and 1/infinity = 0. */
        Slope inverse() const
        {
            if (infinite_)
                return finite(Rational(0));
            if (value_ == 0)
                return infinity();
            return finite(1 / value_);
        }

        bool is_integer() const { return !infinite_ && value_.get_den() == 1; }
        bool is_even_integer() const { return is_integer() && mpz_even_p(value_.get_num().get_mpz_t()); }

        std::string to_string() const { return infinite_ ? "inf" : value_.get_str(); }

        friend bool operator==(const Slope& a, const Slope& b)
        {
            return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
        }

        /** Finite slopes in numeric order, infinity last. */
        friend bool operator<(const Slope& a, const Slope& b)
        {
            if (a.infinite_ || b.infinite_)
                return !a.infinite_ && b.infinite_;
            return a.value_ < b.value_;
        }

    private:
        Slope(bool inf, Rational v) : infinite_(inf), value_(std::move(v)) {}

        bool infinite_;
        Rational value_;
};

using SlopeSet = std::set<Slope>;

inline SlopeSet invert(const SlopeSet& s)
{
    SlopeSet out;
    for (const auto& x : s)
        out.insert(x.inverse());
    return out;
}

inline SlopeSet set_union(const SlopeSet& a, const SlopeSet& b)
{
    SlopeSet out = a;
    out.insert(b.begin(), b.end());
    return out;
}

inline SlopeSet set_intersection(const SlopeSet& a, const SlopeSet& b)
{
    SlopeSet out;
    for (const auto& x : a)
        if (b.count(x))
            out.insert(x);
    return out;
}

/**
 * Convex lattice polygon stored as its vertices in counterclockwise order,
 * starting from the lexicographically smallest vertex; no three retained
 * vertices are collinear. A point has one vertex, a segment two.
 */
class NewtonPolygon
{
    public:
        /** Convex hull of a nonempty point set (Andrew's monotone chain). */
        static NewtonPolygon hull(std::vector<LatticePoint> pts)
        {
            if (pts.empty())
                throw DegenerateInput("convex hull of an empty point set");
            std::sort(pts.begin(), pts.end());
            pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
            NewtonPolygon p;
            if (pts.size() <= 2)
            {
                p.vertices_ = pts;
                return p;
            }
            auto cross = [](const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
                return static_cast<__int128>(a.x - o.x) * (b.y - o.y) - static_cast<__int128>(a.y - o.y) * (b.x - o.x);
            };
            std::vector<LatticePoint> h(2 * pts.size());
            std::size_t k = 0;
            for (std::size_t i = 0; i < pts.size(); ++i)
            {
                while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0)
                    --k;
                h[k++] = pts[i];
            }
            for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;)
            {
                while (k >= lower && cross(h[k - 2], h[k - 1], pts[i]) <= 0)
                    --k;
                h[k++] = pts[i];
            }
            h.resize(k - 1);
            p.vertices_ = std::move(h);
            return p;
        }

        const std::vector<LatticePoint>& vertices() const { return vertices_; }
        bool is_point() const { return vertices_.size() == 1; }
        bool is_segment() const { return vertices_.size() == 2; }

        /** Slopes of the sides; empty exactly for a point. */
        SlopeSet slopes() const
        {
            SlopeSet out;
            const std::size_t n = vertices_.size();
            if (n < 2)
                return out;
            for (std::size_t i = 0; i < n; ++i)
            {
                const auto& a = vertices_[i];
                const auto& b = vertices_[(i + 1) % n];
                out.insert(Slope::of(b.x - a.x, b.y - a.y));
                if (n == 2)
                    break;
            }
            return out;
        }

        bool operator==(const NewtonPolygon&) const = default;

    private:
        std::vector<LatticePoint> vertices_;
};

/**
 * Newton polygon of f in the two variables (x_var, y_var): the hull of the
 * exponent pairs of its terms.
 */
inline NewtonPolygon newton_polygon(const MultiPoly& f, const std::string& x_var = "L", const std::string& y_var = "M")
{
    if (f.is_zero())
        throw DegenerateInput("Newton polygon of the zero polynomial");
    const std::size_t xi = f.index_of(x_var), yi = f.index_of(y_var);
    for (std::size_t i = 0; i < f.num_vars(); ++i)
        if (i != xi && i != yi && f.degree(i) != 0)
            throw AlignmentError("Newton polygon needs a polynomial in " + x_var + " and " + y_var + " only");
    std::vector<LatticePoint> pts;
    for (const auto& [e, c] : f.terms())
        pts.push_back({e[xi], e[yi]});
    return NewtonPolygon::hull(std::move(pts));
}

/** Minkowski sum, as the hull of all pairwise vertex sums. */
inline NewtonPolygon minkowski_sum(const NewtonPolygon& p, const NewtonPolygon& q)
{
    std::vector<LatticePoint> pts;
    pts.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices())
            pts.push_back(a + b);
    return NewtonPolygon::hull(std::move(pts));
}

inline SlopeSet slope_set(const NewtonPolygon& p)
{
    return p.slopes();
}

}   // namespace knots::apoly

#endif
