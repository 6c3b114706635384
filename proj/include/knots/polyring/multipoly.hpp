/**
 * Sparse multivariate Laurent polynomials with exact rational coefficients.
 *
 * A MultiPoly carries its own ordered variable list. Terms are kept in a
 * std::map keyed by exponent vectors, so iteration order is lexicographic
 * in the variable order and equality is plain map equality.
 */

#ifndef KNOTS_POLYRING_MULTIPOLY_HPP
#define KNOTS_POLYRING_MULTIPOLY_HPP

#include <algorithm>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "knots/errors.hpp"

namespace knots::polyring {

using Rational = mpq_class;
using Exponents = std::vector<int>;
using VarList = std::vector<std::string>;

namespace detail {

inline int checked_add(int a, int b)
{
    int out;
    if (__builtin_add_overflow(a, b, &out))
        throw SizeError("exponent overflow");
    return out;
}

inline int checked_mul(int a, int b)
{
    int out;
    if (__builtin_mul_overflow(a, b, &out))
        throw SizeError("exponent overflow");
    return out;
}

}   // namespace detail

class MultiPoly
{
    public:
        using Terms = std::map<Exponents, Rational>;

        MultiPoly() = default;

        explicit MultiPoly(VarList vars) : vars_(std::move(vars))
        {
        }

        MultiPoly(VarList vars, const Rational& c) : vars_(std::move(vars))
        {
            if (c != 0)
                terms_.emplace(Exponents(vars_.size(), 0), c);
        }

        static MultiPoly constant(const VarList& vars, const Rational& c)
        {
            return MultiPoly(vars, c);
        }

        static MultiPoly variable(const VarList& vars, const std::string& name, int power = 1)
        {
            MultiPoly p(vars);
            Exponents e(vars.size(), 0);
            e[p.index_of(name)] = power;
            p.terms_.emplace(std::move(e), Rational(1));
            return p;
        }

        static MultiPoly monomial(const VarList& vars, Exponents e, const Rational& c)
        {
            if (e.size() != vars.size())
                throw AlignmentError("exponent vector length does not match variable list");
            MultiPoly p(vars);
            if (c != 0)
                p.terms_.emplace(std::move(e), c);
            return p;
        }

        const VarList& vars() const { return vars_; }
        const Terms& terms() const { return terms_; }
        std::size_t num_vars() const { return vars_.size(); }
        std::size_t size() const { return terms_.size(); }
        bool is_zero() const { return terms_.empty(); }

        bool has_var(const std::string& name) const
        {
            return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
        }

        std::size_t index_of(const std::string& name) const
        {
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end())
                throw AlignmentError("unknown variable '" + name + "'");
            return static_cast<std::size_t>(it - vars_.begin());
        }

        /** Accumulate c * vars^e; zero results are dropped. */
        void add_term(const Exponents& e, const Rational& c)
        {
            if (e.size() != vars_.size())
                throw AlignmentError("exponent vector length does not match variable list");
            if (c == 0)
                return;
            auto [it, inserted] = terms_.try_emplace(e, c);
            if (!inserted)
            {
                it->second += c;
                if (it->second == 0)
                    terms_.erase(it);
            }
        }

        bool is_constant() const
        {
            if (terms_.empty())
                return true;
            if (terms_.size() > 1)
                return false;
            const auto& e = terms_.begin()->first;
            return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
        }

        bool is_monomial() const { return terms_.size() == 1; }

        /** Constant term (zero when absent). */
        Rational constant_value() const
        {
            auto it = terms_.find(Exponents(vars_.size(), 0));
            return it == terms_.end() ? Rational(0) : it->second;
        }

        /** Lexicographically largest term. Requires a nonzero polynomial. */
        const std::pair<const Exponents, Rational>& leading_term() const
        {
            if (terms_.empty())
                throw DegenerateInput("leading term of the zero polynomial");
            return *terms_.rbegin();
        }

        int degree(std::size_t var) const
        {
            int d = std::numeric_limits<int>::min();
            for (const auto& [e, c] : terms_)
                d = std::max(d, e[var]);
            return terms_.empty() ? 0 : d;
        }

        int degree(const std::string& var) const { return degree(index_of(var)); }

        int min_degree(std::size_t var) const
        {
            int d = std::numeric_limits<int>::max();
            for (const auto& [e, c] : terms_)
                d = std::min(d, e[var]);
            return terms_.empty() ? 0 : d;
        }

        int min_degree(const std::string& var) const { return min_degree(index_of(var)); }

        int total_degree() const
        {
            int d = 0;
            for (const auto& [e, c] : terms_)
            {
                int sum = 0;
                for (int x : e)
                    sum += x;
                d = std::max(d, sum);
            }
            return d;
        }

        /** True when some exponent is negative. */
        bool is_laurent() const
        {
            for (const auto& [e, c] : terms_)
                for (int x : e)
                    if (x < 0)
                        return true;
            return false;
        }

        /**
         * Coefficient of var^k, returned over the same variable list with the
         * exponent of var cleared.
         */
        MultiPoly coefficient(std::size_t var, int k) const
        {
            MultiPoly out(vars_);
            for (const auto& [e, c] : terms_)
            {
                if (e[var] != k)
                    continue;
                Exponents f = e;
                f[var] = 0;
                out.terms_.emplace(std::move(f), c);
            }
            return out;
        }

        MultiPoly coefficient(const std::string& var, int k) const
        {
            return coefficient(index_of(var), k);
        }

        /** All coefficients in var, keyed by exponent. */
        std::map<int, MultiPoly> coefficients(std::size_t var) const
        {
            std::map<int, MultiPoly> out;
            for (const auto& [e, c] : terms_)
            {
                Exponents f = e;
                f[var] = 0;
                auto it = out.try_emplace(e[var], MultiPoly(vars_)).first;
                it->second.terms_.emplace(std::move(f), c);
            }
            return out;
        }

        MultiPoly leading_coefficient(std::size_t var) const
        {
            return coefficient(var, degree(var));
        }

        MultiPoly& operator+=(const MultiPoly& other)
        {
            check_aligned(other);
            for (const auto& [e, c] : other.terms_)
                add_term(e, c);
            return *this;
        }

        MultiPoly& operator-=(const MultiPoly& other)
        {
            check_aligned(other);
            for (const auto& [e, c] : other.terms_)
                add_term(e, -c);
            return *this;
        }

        MultiPoly& operator*=(const Rational& c)
        {
            if (c == 0)
                terms_.clear();
            else
                for (auto& [e, v] : terms_)
                    v *= c;
            return *this;
        }

        friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
        friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
        friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
        friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

        friend MultiPoly operator-(MultiPoly a)
        {
            for (auto& [e, v] : a.terms_)
                v = -v;
            return a;
        }

        friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
        {
            a.check_aligned(b);
            MultiPoly out(a.vars_);
            const std::size_t n = a.vars_.size();
            Exponents e(n);
            for (const auto& [ea, ca] : a.terms_)
            {
                for (const auto& [eb, cb] : b.terms_)
                {
                    for (std::size_t i = 0; i < n; ++i)
                        e[i] = detail::checked_add(ea[i], eb[i]);
                    out.add_term(e, ca * cb);
                }
            }
            return out;
        }

        MultiPoly& operator*=(const MultiPoly& other)
        {
            *this = *this * other;
            return *this;
        }

        /** Multiply by the monomial vars^shift. */
        MultiPoly shifted(const Exponents& shift) const
        {
            if (shift.size() != vars_.size())
                throw AlignmentError("shift length does not match variable list");
            MultiPoly out(vars_);
            for (const auto& [e, c] : terms_)
            {
                Exponents f = e;
                for (std::size_t i = 0; i < f.size(); ++i)
                    f[i] = detail::checked_add(f[i], shift[i]);
                out.terms_.emplace(std::move(f), c);
            }
            return out;
        }

        MultiPoly pow(unsigned n) const
        {
            if (n > 0 && !terms_.empty())
            {
                // Exponent growth check up front.
                for (const auto& [e, c] : terms_)
                    for (int x : e)
                        detail::checked_mul(x, static_cast<int>(n));
            }
            MultiPoly result(vars_, Rational(1));
            MultiPoly base = *this;
            while (n > 0)
            {
                if (n & 1u)
                    result *= base;
                n >>= 1u;
                if (n > 0)
                    base *= base;
            }
            return result;
        }

        MultiPoly derivative(std::size_t var) const
        {
            MultiPoly out(vars_);
            for (const auto& [e, c] : terms_)
            {
                if (e[var] == 0)
                    continue;
                Exponents f = e;
                f[var] -= 1;
                out.add_term(f, c * e[var]);
            }
            return out;
        }

        MultiPoly derivative(const std::string& var) const { return derivative(index_of(var)); }

        /**
         * Replace var by value. A negative power of var needs value to be a
         * single term, since only units of the Laurent ring can be inverted.
         */
        MultiPoly substitute(const std::string& var, const MultiPoly& value) const
        {
            const std::size_t vi = index_of(var);
            check_aligned(value);
            std::map<int, MultiPoly> powers;
            auto power_of = [&](int k) -> const MultiPoly& {
                auto it = powers.find(k);
                if (it != powers.end())
                    return it->second;
                MultiPoly p(vars_);
                if (k >= 0)
                {
                    p = value.pow(static_cast<unsigned>(k));
                }
                else
                {
                    if (!value.is_monomial())
                        throw NonInvertibleSubstitution(
                            "negative power of '" + var + "' needs a single-term substitution value");
                    const auto& [e, c] = *value.terms_.begin();
                    Exponents inv(e.size());
                    for (std::size_t i = 0; i < e.size(); ++i)
                        inv[i] = -e[i];
                    p = monomial(vars_, inv, 1 / c).pow(static_cast<unsigned>(-k));
                }
                return powers.emplace(k, std::move(p)).first->second;
            };

            MultiPoly out(vars_);
            for (const auto& [e, c] : terms_)
            {
                Exponents f = e;
                f[vi] = 0;
                MultiPoly rest = monomial(vars_, f, c);
                out += rest * power_of(e[vi]);
            }
            return out;
        }

        /** Re-express over a different variable list; every used variable must survive. */
        MultiPoly with_vars(const VarList& target) const
        {
            std::vector<std::size_t> map(vars_.size());
            std::vector<bool> used(vars_.size(), false);
            for (const auto& [e, c] : terms_)
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (e[i] != 0)
                        used[i] = true;
            MultiPoly out(target);
            const std::size_t missing = std::numeric_limits<std::size_t>::max();
            for (std::size_t i = 0; i < vars_.size(); ++i)
            {
                auto it = std::find(target.begin(), target.end(), vars_[i]);
                if (it == target.end())
                {
                    if (used[i])
                        throw AlignmentError("variable '" + vars_[i] + "' is not in the target list");
                    map[i] = missing;
                }
                else
                {
                    map[i] = static_cast<std::size_t>(it - target.begin());
                }
            }
            for (const auto& [e, c] : terms_)
            {
                Exponents f(target.size(), 0);
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (map[i] != missing)
                        f[map[i]] = e[i];
                out.terms_.emplace(std::move(f), c);
            }
            return out;
        }

        /** Same terms, variable names replaced position-wise. */
        MultiPoly renamed(const std::string& from, const std::string& to) const
        {
            MultiPoly out = *this;
            out.vars_[index_of(from)] = to;
            return out;
        }

        /** Swap the exponents of two variables (f^T for bivariate f). */
        MultiPoly swapped(const std::string& a, const std::string& b) const
        {
            const std::size_t ia = index_of(a), ib = index_of(b);
            MultiPoly out(vars_);
            for (const auto& [e, c] : terms_)
            {
                Exponents f = e;
                std::swap(f[ia], f[ib]);
                out.terms_.emplace(std::move(f), c);
            }
            return out;
        }

        /** Numeric evaluation; values are given in variable order. */
        template <typename T>
        std::complex<T> evaluate(std::span<const std::complex<T>> values) const
        {
            if (values.size() != vars_.size())
                throw AlignmentError("evaluation point has the wrong dimension");
            std::complex<T> sum(0);
            for (const auto& [e, c] : terms_)
            {
                std::complex<T> term(static_cast<T>(c.get_d()));
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (e[i] != 0)
                        term *= std::pow(values[i], e[i]);
                sum += term;
            }
            return sum;
        }

        std::complex<double> evaluate(std::initializer_list<std::complex<double>> values) const
        {
            return evaluate<double>(std::span<const std::complex<double>>(values.begin(), values.size()));
        }

        /** Sum of |coefficient| * prod |value_i|^e_i; the scale used for relative residuals. */
        template <typename T>
        T magnitude(std::span<const std::complex<T>> values) const
        {
            T sum = 0;
            for (const auto& [e, c] : terms_)
            {
                T term = std::abs(static_cast<T>(c.get_d()));
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (e[i] != 0)
                        term *= std::pow(std::abs(values[i]), static_cast<T>(e[i]));
                sum += term;
            }
            return sum;
        }

        friend bool operator==(const MultiPoly& a, const MultiPoly& b)
        {
            return a.vars_ == b.vars_ && a.terms_ == b.terms_;
        }

        void check_aligned(const MultiPoly& other) const
        {
            if (vars_ != other.vars_)
                throw AlignmentError("polynomials are over different variable lists");
        }

    private:
        VarList vars_;
        Terms terms_;
};

/** p^n, n >= 0. */
inline MultiPoly pow(const MultiPoly& p, unsigned n) { return p.pow(n); }

enum class ArithOp { add, sub, mul, pow };

/** Dispatch form of the ring operations; pow uses `exponent` and ignores q. */
inline MultiPoly arith(const MultiPoly& p, const MultiPoly& q, ArithOp op, unsigned exponent = 0)
{
    switch (op)
    {
        case ArithOp::add: return p + q;
        case ArithOp::sub: return p - q;
        case ArithOp::mul: return p * q;
        case ArithOp::pow: return p.pow(exponent);
    }
    return p;
}

/** Univariate polynomial in `var` from ascending integer coefficients. */
inline MultiPoly from_coefficients(const std::string& var, const std::vector<Rational>& ascending)
{
    MultiPoly p(VarList{var});
    for (std::size_t k = 0; k < ascending.size(); ++k)
        p.add_term(Exponents{static_cast<int>(k)}, ascending[k]);
    return p;
}

}   // namespace knots::polyring

#endif
