/**
 * CSV input of externally supplied A-polynomials.
 *
 * Records follow RFC 4180 (quoted fields, doubled quotes, CRLF or LF line
 * ends). The header names the columns "name", "vars" and "terms"; "vars" and
 * "terms" hold the JSON arrays of the polynomial serialization, e.g.
 *
 *     name,vars,terms
 *     3_1,"[""L"",""M""]","[[[0,6],""1""],[[1,0],""1""]]"
 */

#ifndef KNOTS_APOLY_CSV_HPP
#define KNOTS_APOLY_CSV_HPP

#include <algorithm>
#include <istream>
#include <iterator>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "knots/apoly/apolynomial.hpp"
#include "knots/errors.hpp"
#include "knots/polyring/io.hpp"

namespace knots::apoly {

/** Split CSV text into records of fields. */
inline std::vector<std::vector<std::string>> parse_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool quoted = false, field_started = false;
    std::size_t line = 1;
    auto end_field = [&] {
        row.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        if (!(row.size() == 1 && row[0].empty()))
            rows.push_back(std::move(row));
        row.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i)
    {
        const char c = text[i];
        if (quoted)
        {
            if (c == '"')
            {
                if (i + 1 < text.size() && text[i + 1] == '"')
                {
                    field += '"';
                    ++i;
                }
                else
                {
                    quoted = false;
                    if (i + 1 < text.size() && text[i + 1] != ',' && text[i + 1] != '\n' && text[i + 1] != '\r')
                        throw ParseError("CSV line " + std::to_string(line) + ": characters after closing quote");
                }
            }
            else
            {
                if (c == '\n')
                    ++line;
                field += c;
            }
            continue;
        }
        if (c == '"')
        {
            if (field_started || !field.empty())
                throw ParseError("CSV line " + std::to_string(line) + ": quote inside an unquoted field");
            quoted = true;
            field_started = true;
        }
        else if (c == ',')
        {
            end_field();
        }
        else if (c == '\r')
        {
            if (i + 1 < text.size() && text[i + 1] == '\n')
                continue;
            end_row();
            ++line;
        }
        else if (c == '\n')
        {
            end_row();
            ++line;
        }
        else
        {
            field += c;
        }
    }
    if (quoted)
        throw ParseError("CSV: unterminated quoted field");
    if (!field.empty() || field_started || !row.empty())
        end_row();
    return rows;
}

/** Quote a field when it contains a separator, quote or line break. */
inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\r\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s)
    {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

struct NamedPolynomial
{
    std::string name;
    MultiPoly polynomial;   // over (L, M)
};

/** Read named A-polynomials in the variables L and M. */
inline std::vector<NamedPolynomial> read_apolynomial_csv(std::istream& in)
{
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto rows = parse_csv(text);
    if (rows.empty())
        throw ParseError("CSV: missing header");
    const auto& header = rows.front();
    auto column = [&](const std::string& name) {
        auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end())
            throw ParseError("CSV: missing column '" + name + "'");
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t cn = column("name"), cv = column("vars"), ct = column("terms");
    std::vector<NamedPolynomial> out;
    for (std::size_t r = 1; r < rows.size(); ++r)
    {
        const auto& row = rows[r];
        const std::string where = "CSV record " + std::to_string(r);
        if (row.size() != header.size())
            throw ParseError(where + ": expected " + std::to_string(header.size()) + " fields, found " +
                             std::to_string(row.size()));
        nlohmann::json j;
        try
        {
            j["vars"] = nlohmann::json::parse(row[cv]);
            j["terms"] = nlohmann::json::parse(row[ct]);
        }
        catch (const nlohmann::json::exception& e)
        {
            throw ParseError(where + ": malformed JSON: " + e.what());
        }
        MultiPoly p(lm_vars());
        try
        {
            MultiPoly raw = polyring::poly_from_json(j);
            VarList vars = raw.vars();
            std::sort(vars.begin(), vars.end());
            if (vars != VarList{"L", "M"})
                throw ParseError(where + ": A-polynomial variables must be L and M");
            p = raw.with_vars(lm_vars());
        }
        catch (const nlohmann::json::exception& e)
        {
            throw ParseError(where + ": malformed polynomial: " + e.what());
        }
        catch (const ParseError& e)
        {
            throw ParseError(std::string(e.what()).starts_with("CSV") ? e.what() : where + ": " + e.what());
        }
        if (p.is_zero())
            throw ParseError(where + ": zero polynomial");
        out.push_back({row[cn], std::move(p)});
    }
    return out;
}

}   // namespace knots::apoly

#endif
