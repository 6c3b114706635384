/**
 * Word evaluation in 2x2 matrix groups, integral group rings of free groups,
 * and Fox free differential calculus.
 */

#ifndef KNOTS_WORDS_FOX_HPP
#define KNOTS_WORDS_FOX_HPP

#include <cstdlib>
#include <map>
#include <string>

#include "knots/errors.hpp"
#include "knots/words/group_word.hpp"
#include "knots/words/mat2.hpp"

namespace knots::words {

template <typename T>
using Assignment = std::map<std::string, Mat2<T>>;

namespace detail {

template <typename T>
T sample_scalar(const Assignment<T>& assignment)
{
    if (!assignment.empty())
        return assignment.begin()->second.a11;
    if constexpr (std::is_same_v<T, polyring::MultiPoly>)
        return polyring::MultiPoly(polyring::VarList{});
    else
        return T(0);
}

}   // namespace detail

/**
 * Product of the assigned matrices along the word. Negative exponents use
 * the matrix inverse, which must exist over the scalar ring.
 */
template <typename T>
Mat2<T> evaluate_word(const GroupWord& w, const Assignment<T>& assignment)
{
    Mat2<T> result = Mat2<T>::identity_like(detail::sample_scalar(assignment));
    std::map<std::string, Mat2<T>> inverses;
    for (const auto& [g, e] : w.letters())
    {
        auto it = assignment.find(g);
        if (it == assignment.end())
            throw BindingError("generator '" + g + "' has no assigned matrix");
        if (e > 0)
        {
            result = result * it->second.pow(static_cast<unsigned>(e));
        }
        else
        {
            auto inv = inverses.find(g);
            if (inv == inverses.end())
                inv = inverses.emplace(g, it->second.inverse()).first;
            result = result * inv->second.pow(static_cast<unsigned>(-e));
        }
    }
    return result;
}

/** Finite Z-linear combination of reduced words. */
class GroupRingElem
{
    public:
        GroupRingElem() = default;

        GroupRingElem(const GroupWord& w, long long c = 1) { add(w, c); }

        static GroupRingElem one() { return GroupRingElem(GroupWord{}); }

        const std::map<GroupWord, long long>& terms() const { return terms_; }
        bool is_zero() const { return terms_.empty(); }

        void add(const GroupWord& w, long long c)
        {
            if (c == 0)
                return;
            auto [it, inserted] = terms_.try_emplace(w, c);
            if (!inserted)
            {
                it->second += c;
                if (it->second == 0)
                    terms_.erase(it);
            }
        }

        GroupRingElem& operator+=(const GroupRingElem& o)
        {
            for (const auto& [w, c] : o.terms_)
                add(w, c);
            return *this;
        }

        GroupRingElem& operator-=(const GroupRingElem& o)
        {
            for (const auto& [w, c] : o.terms_)
                add(w, -c);
            return *this;
        }

        friend GroupRingElem operator+(GroupRingElem a, const GroupRingElem& b) { return a += b; }
        friend GroupRingElem operator-(GroupRingElem a, const GroupRingElem& b) { return a -= b; }

        friend GroupRingElem operator*(const GroupRingElem& a, const GroupRingElem& b)
        {
            GroupRingElem out;
            for (const auto& [u, cu] : a.terms_)
                for (const auto& [v, cv] : b.terms_)
                    out.add(u * v, cu * cv);
            return out;
        }

        friend GroupRingElem operator*(long long c, const GroupRingElem& a)
        {
            GroupRingElem out;
            for (const auto& [w, cw] : a.terms_)
                out.add(w, c * cw);
            return out;
        }

        bool operator==(const GroupRingElem&) const = default;

    private:
        std::map<GroupWord, long long> terms_;
};

/**
 * Fox derivative d w / d g, from the rules dg/dg = 1, dg^-1/dg = -g^-1 and
 * d(uv)/dg = du/dg + u dv/dg applied syllable by syllable.
 */
inline GroupRingElem fox_derivative(const GroupWord& w, const std::string& g)
{
    GroupRingElem out;
    GroupWord prefix;
    for (const auto& [h, e] : w.letters())
    {
        if (h == g)
        {
            if (e > 0)
            {
                // d(g^e) = 1 + g + ... + g^(e-1)
                for (int k = 0; k < e; ++k)
                    out.add(prefix * GroupWord::generator(g, k), 1);
            }
            else
            {
                // d(g^-n) = -(g^-1 + ... + g^-n)
                for (int k = 1; k <= -e; ++k)
                    out.add(prefix * GroupWord::generator(g, -k), -1);
            }
        }
        prefix.append(h, e);
    }
    return out;
}

/** Sum of c * evaluate_word(w) over the terms. */
template <typename T>
Mat2<T> evaluate_group_ring(const GroupRingElem& e, const Assignment<T>& assignment)
{
    const T sample = detail::sample_scalar(assignment);
    Mat2<T> out = Mat2<T>::zero_like(sample);
    for (const auto& [w, c] : e.terms())
    {
        T coeff = Mat2<T>::identity_like(sample).a11;
        if constexpr (std::is_same_v<T, polyring::MultiPoly>)
            coeff *= polyring::Rational(static_cast<long>(c));
        else
            coeff *= static_cast<typename T::value_type>(c);
        out += coeff * evaluate_word(w, assignment);
    }
    return out;
}

}   // namespace knots::words

#endif
