/**
 * Reduced words in a free group on named generators.
 *
 * A word is stored as a list of syllables (generator, exponent) with no zero
 * exponents and no two adjacent syllables on the same generator, so equal
 * group elements of the free group have identical representations.
 */

#ifndef KNOTS_WORDS_GROUP_WORD_HPP
#define KNOTS_WORDS_GROUP_WORD_HPP

#include <cctype>
#include <compare>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "knots/errors.hpp"

namespace knots::words {

struct Letter
{
    std::string generator;
    int exponent = 1;

    auto operator<=>(const Letter&) const = default;
    bool operator==(const Letter&) const = default;
};

class GroupWord
{
    public:
        GroupWord() = default;

        /** The word g^exponent (identity when exponent is zero). */
        static GroupWord generator(const std::string& name, int exponent = 1)
        {
            GroupWord w;
            w.append(name, exponent);
            return w;
        }

        const std::vector<Letter>& letters() const { return letters_; }
        bool is_identity() const { return letters_.empty(); }
        std::size_t syllables() const { return letters_.size(); }

        /** Total number of letters, i.e. the sum of |exponent| over syllables. */
        std::size_t length() const
        {
            std::size_t n = 0;
            for (const auto& l : letters_)
                n += static_cast<std::size_t>(std::abs(l.exponent));
            return n;
        }

        /** Multiply on the right by g^exponent, keeping the word reduced. */
        void append(const std::string& name, int exponent)
        {
            if (exponent == 0)
                return;
            if (!letters_.empty() && letters_.back().generator == name)
            {
                letters_.back().exponent += exponent;
                if (letters_.back().exponent == 0)
                    letters_.pop_back();
                return;
            }
            letters_.push_back({name, exponent});
        }

        GroupWord& operator*=(const GroupWord& other)
        {
            for (const auto& l : other.letters_)
                append(l.generator, l.exponent);
            return *this;
        }

        friend GroupWord operator*(GroupWord a, const GroupWord& b) { return a *= b; }

        GroupWord inverse() const
        {
            GroupWord w;
            for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
                w.append(it->generator, -it->exponent);
            return w;
        }

        /** w^n for any integer n. */
        GroupWord pow(int n) const
        {
            const GroupWord base = n < 0 ? inverse() : *this;
            GroupWord w;
            for (int k = 0; k < std::abs(n); ++k)
                w *= base;
            return w;
        }

        int exponent_sum(const std::string& name) const
        {
            int total = 0;
            for (const auto& l : letters_)
                if (l.generator == name)
                    total += l.exponent;
            return total;
        }

        std::set<std::string> generators() const
        {
            std::set<std::string> out;
            for (const auto& l : letters_)
                out.insert(l.generator);
            return out;
        }

        /** Space-separated syllables, e.g. "y x^-1 y^-1 x"; "1" for the identity. */
        std::string to_string() const
        {
            if (letters_.empty())
                return "1";
            std::string out;
            for (const auto& l : letters_)
            {
                if (!out.empty())
                    out += ' ';
                out += l.generator;
                if (l.exponent != 1)
                    out += "^" + std::to_string(l.exponent);
            }
            return out;
        }

        auto operator<=>(const GroupWord&) const = default;
        bool operator==(const GroupWord&) const = default;

    private:
        std::vector<Letter> letters_;
};

/** Commutator [a, b] = a b a^-1 b^-1. */
inline GroupWord commutator(const GroupWord& a, const GroupWord& b)
{
    return a * b * a.inverse() * b.inverse();
}

/**
 * Parse a word literal such as "z^q x y^-1 z^-q".
 *
 * Tokens are whitespace separated; each is a name optionally followed by
 * "^" and an exponent, which is an integer, "q", or "-q" (q is substituted
 * at parse time). Names found in `abbreviations` expand to their words;
 * every other name is a generator. The literal "1" is the identity.
 */
inline GroupWord parse_word(const std::string& text,
                            const std::map<std::string, GroupWord>& abbreviations = {},
                            int q = 1)
{
    std::istringstream in(text);
    std::string token;
    GroupWord w;
    while (in >> token)
    {
        if (token == "1")
            continue;
        std::string name = token;
        int exponent = 1;
        if (auto caret = token.find('^'); caret != std::string::npos)
        {
            name = token.substr(0, caret);
            std::string e = token.substr(caret + 1);
            if (e == "q")
                exponent = q;
            else if (e == "-q")
                exponent = -q;
            else
            {
                std::size_t used = 0;
                try
                {
                    exponent = std::stoi(e, &used);
                }
                catch (const std::exception&)
                {
                    throw ParseError("malformed exponent in word token '" + token + "'");
                }
                if (used != e.size())
                    throw ParseError("malformed exponent in word token '" + token + "'");
            }
        }
        if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])))
            throw ParseError("malformed word token '" + token + "'");
        for (char c : name)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw ParseError("malformed word token '" + token + "'");
        if (auto it = abbreviations.find(name); it != abbreviations.end())
            w *= it->second.pow(exponent);
        else
            w.append(name, exponent);
    }
    return w;
}

}   // namespace knots::words

#endif
