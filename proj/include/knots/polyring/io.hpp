/**
 * JSON and text forms of MultiPoly.
 *
 * JSON: {"vars": ["s","t"], "terms": [[[e1,e2], "num/den"], ...]} with terms
 * in ascending lexicographic order of exponent vectors.
 */

#ifndef KNOTS_POLYRING_IO_HPP
#define KNOTS_POLYRING_IO_HPP

#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "knots/polyring/multipoly.hpp"

namespace knots::polyring {

inline nlohmann::ordered_json to_json(const MultiPoly& p)
{
    nlohmann::ordered_json j;
    j["vars"] = p.vars();
    auto terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(nlohmann::ordered_json::array({e, c.get_str()}));
    j["terms"] = std::move(terms);
    return j;
}

template <typename Json>
MultiPoly poly_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw ParseError("polynomial JSON needs \"vars\" and \"terms\"");
    VarList vars = j.at("vars").template get<VarList>();
    MultiPoly p(vars);
    for (const auto& term : j.at("terms"))
    {
        if (!term.is_array() || term.size() != 2)
            throw ParseError("polynomial term must be [exponents, coefficient]");
        Exponents e = term.at(0).template get<Exponents>();
        if (e.size() != vars.size())
            throw ParseError("exponent vector length does not match \"vars\"");
        Rational c;
        const auto& cj = term.at(1);
        if (cj.is_string())
        {
            if (c.set_str(cj.template get<std::string>(), 10) != 0)
                throw ParseError("malformed rational coefficient '" + cj.template get<std::string>() + "'");
        }
        else if (cj.is_number_integer())
        {
            c = Rational(mpz_class(std::to_string(cj.template get<long long>())));
        }
        else
        {
            throw ParseError("coefficient must be a \"num/den\" string or an integer");
        }
        c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

namespace detail {

inline std::string monomial_string(const MultiPoly& p, const Exponents& e, const std::string& sep)
{
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i)
    {
        if (e[i] == 0)
            continue;
        if (!out.empty())
            out += sep;
        out += p.vars()[i];
        if (e[i] != 1)
            out += "^" + std::to_string(e[i]);
    }
    return out;
}

// Terms in descending lexicographic order, joined with the given spacing.
inline std::string flat_string(const MultiPoly& p, bool spaced)
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    {
        const auto& [e, c] = *it;
        Rational mag = abs(c);
        std::string mono = monomial_string(p, e, "*");
        std::string body;
        if (mono.empty())
            body = mag.get_str();
        else if (mag == 1)
            body = mono;
        else
            body = mag.get_str() + "*" + mono;
        if (first)
            out += (c < 0 ? "-" : "") + body;
        else if (spaced)
            out += (c < 0 ? " - " : " + ") + body;
        else
            out += (c < 0 ? "-" : "+") + body;
        first = false;
    }
    return out;
}

}   // namespace detail

/** Human-readable form, highest lexicographic term first: "xi^2 - t - 3". */
inline std::string to_string(const MultiPoly& p)
{
    return detail::flat_string(p, true);
}

inline std::ostream& operator<<(std::ostream& os, const MultiPoly& p)
{
    return os << to_string(p);
}

/**
 * Collect by powers of `var`, highest first; multi-term coefficients are
 * parenthesized with their leading sign pulled out:
 * "t^2 - (xi^2-5) t - xi^2 + 5".
 */
inline std::string to_grouped_string(const MultiPoly& p, const std::string& var)
{
    if (p.is_zero())
        return "0";
    const std::size_t vi = p.index_of(var);
    auto groups = p.coefficients(vi);
    std::string out;
    bool first = true;
    auto emit = [&](bool negative, const std::string& body) {
        if (first)
            out += (negative ? "-" : "") + body;
        else
            out += (negative ? " - " : " + ") + body;
        first = false;
    };
    for (auto it = groups.rbegin(); it != groups.rend(); ++it)
    {
        const int k = it->first;
        const MultiPoly& c = it->second;
        std::string power = var;
        if (k != 1)
            power += "^" + std::to_string(k);
        if (k == 0)
        {
            for (auto t = c.terms().rbegin(); t != c.terms().rend(); ++t)
            {
                MultiPoly single = MultiPoly::monomial(c.vars(), t->first, abs(t->second));
                emit(t->second < 0, detail::flat_string(single, false));
            }
        }
        else if (c.is_monomial())
        {
            const auto& [e, v] = *c.terms().begin();
            MultiPoly single = MultiPoly::monomial(c.vars(), e, abs(v));
            std::string coeff = single.is_constant() && abs(v) == 1 ? "" : detail::flat_string(single, false) + " ";
            emit(v < 0, coeff + power);
        }
        else
        {
            const bool negative = c.leading_term().second < 0;
            MultiPoly inner = negative ? -c : c;
            emit(negative, "(" + detail::flat_string(inner, false) + ") " + power);
        }
    }
    return out;
}

}   // namespace knots::polyring

#endif
