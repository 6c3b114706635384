/**
 * The command-line front end. Every pipeline stage is a subcommand; reports
 * are written as JSON (default), CSV or a short human-readable form.
 *
 * Exit status: 0 on success, 1 when a computation could not be certified
 * (or an acceptance criterion failed), 2 on a usage or input error.
 */

#ifndef KNOTS_CLI_APP_HPP
#define KNOTS_CLI_APP_HPP

#include <complex>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "knots/apoly/apolynomial.hpp"
#include "knots/apoly/criterion.hpp"
#include "knots/apoly/csv.hpp"
#include "knots/apoly/newton.hpp"
#include "knots/polyring/io.hpp"
#include "knots/splice/bending.hpp"
#include "knots/splice/characters.hpp"
#include "knots/splice/system.hpp"
#include "knots/splice/tolerances.hpp"
#include "knots/twistknot/model.hpp"
#include "knots/verify/acceptance.hpp"

namespace knots::cli {

using Json = nlohmann::ordered_json;
using cd = std::complex<double>;
using polyring::MultiPoly;

enum class OutputFormat
{
    json,
    csv,
    pretty,
};

struct RunConfig
{
    std::string command;
    int q = 1;
    int q1 = 1;
    int q2 = 1;
    splice::Tolerances tolerances;
    OutputFormat output = OutputFormat::json;
    std::optional<std::string> input_path;
    std::string k1, k2;        // polynomial names in the input CSV
    std::uint64_t seed = 2024;
    double a_re = 2.0, a_im = 0.0;
    int index = 0;             // which genuine acyclic character `bend` uses
};

/** Errors caused by the invocation rather than by the computation. */
class UsageError : public Error { using Error::Error; };

namespace detail {

/** Zero out a component that is rounding noise relative to the other. */
inline cd clean(cd z)
{
    const double scale = 1e-14 * (1.0 + std::abs(z));
    return {std::abs(z.real()) <= scale ? 0.0 : z.real(), std::abs(z.imag()) <= scale ? 0.0 : z.imag()};
}

inline Json complex_json(cd z)
{
    z = clean(z);
    return Json::array({z.real(), z.imag()});
}

inline Json slopes_json(const apoly::SlopeSet& s)
{
    Json out = Json::array();
    for (const auto& x : s)
        out.push_back(x.to_string());
    return out;
}

inline std::string slopes_text(const apoly::SlopeSet& s)
{
    std::string out = "{";
    for (const auto& x : s)
        out += (out.size() > 1 ? ", " : "") + x.to_string();
    return out + "}";
}

inline std::string complex_text(cd z)
{
    z = clean(z);
    std::ostringstream os;
    os << std::setprecision(12) << z.real();
    if (z.imag() != 0)
        os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

/** The fields every report carries. */
inline Json envelope(const RunConfig& cfg)
{
    Json j;
    j["command"] = cfg.command;
    j["tolerances"] = {{"root_cert", cfg.tolerances.root_cert},
                       {"dedup", cfg.tolerances.dedup},
                       {"rank", cfg.tolerances.rank},
                       {"gluing", cfg.tolerances.gluing}};
    j["convention"] = splice::torsion_convention();
    j["seed"] = cfg.seed;
    return j;
}

inline void csv_preamble(const RunConfig& cfg, std::ostream& out)
{
    out << "# command: " << cfg.command << "\n"
        << "# tolerances: root_cert=" << cfg.tolerances.root_cert << " dedup=" << cfg.tolerances.dedup
        << " rank=" << cfg.tolerances.rank << " gluing=" << cfg.tolerances.gluing << "\n"
        << "# convention: " << splice::torsion_convention() << "\n";
}

inline std::vector<apoly::NamedPolynomial> read_input(const RunConfig& cfg)
{
    std::ifstream in(*cfg.input_path);
    if (!in)
        throw UsageError("cannot open input file '" + *cfg.input_path + "'");
    return apoly::read_apolynomial_csv(in);
}

inline const MultiPoly& find_named(const std::vector<apoly::NamedPolynomial>& rows, const std::string& name)
{
    for (const auto& r : rows)
        if (r.name == name)
            return r.polynomial;
    throw UsageError("no polynomial named '" + name + "' in the input CSV");
}

// --- commands ---------------------------------------------------------------

inline int cmd_riley(const RunConfig& cfg, std::ostream& out)
{
    const auto m = twistknot::build_model(cfg.q);
    const MultiPoly phi = twistknot::riley_polynomial(m);
    const MultiPoly phi_xi = twistknot::riley_xi(m);
    const std::string text = polyring::to_grouped_string(phi_xi, "t");
    switch (cfg.output)
    {
        case OutputFormat::pretty:
            out << text << "\n";
            break;
        case OutputFormat::csv:
            csv_preamble(cfg, out);
            out << "q,riley\n" << cfg.q << "," << apoly::csv_field(text) << "\n";
            break;
        case OutputFormat::json:
        {
            Json j = envelope(cfg);
            j["q"] = cfg.q;
            j["riley"] = polyring::to_json(phi_xi);
            j["riley_st"] = polyring::to_json(phi);
            j["text"] = text;
            out << j.dump(2) << "\n";
        }
    }
    return 0;
}

inline int cmd_apoly(const RunConfig& cfg, std::ostream& out)
{
    const auto a = apoly::a_polynomial_full(twistknot::build_model(cfg.q));
    const auto slopes = apoly::newton_polygon(a.polynomial).slopes();
    switch (cfg.output)
    {
        case OutputFormat::pretty:
            out << "A(L, M) = " << polyring::to_string(a.polynomial) << "\n"
                << "nonabelian factor: " << polyring::to_string(a.nonabelian) << "\n"
                << "Newton slopes: " << slopes_text(slopes) << "\n";
            break;
        case OutputFormat::csv:
        {
            csv_preamble(cfg, out);
            Json p = polyring::to_json(a.polynomial);
            out << "name,vars,terms\n"
                << "q=" << cfg.q << "," << apoly::csv_field(p["vars"].dump()) << ","
                << apoly::csv_field(p["terms"].dump()) << "\n";
            break;
        }
        case OutputFormat::json:
        {
            Json j = envelope(cfg);
            j["q"] = cfg.q;
            j["a_polynomial"] = polyring::to_json(a.polynomial);
            j["nonabelian"] = polyring::to_json(a.nonabelian);
            j["text"] = polyring::to_string(a.polynomial);
            j["slopes"] = slopes_json(slopes);
            out << j.dump(2) << "\n";
        }
    }
    return 0;
}

inline int cmd_newton(const RunConfig& cfg, std::ostream& out)
{
    std::vector<apoly::NamedPolynomial> polys;
    if (cfg.input_path)
        polys = read_input(cfg);
    else
        polys.push_back({"q=" + std::to_string(cfg.q), apoly::a_polynomial(twistknot::build_model(cfg.q))});

    Json list = Json::array();
    if (cfg.output == OutputFormat::csv)
    {
        csv_preamble(cfg, out);
        out << "name,vertices,slopes\n";
    }
    for (const auto& np : polys)
    {
        const auto poly = apoly::newton_polygon(np.polynomial);
        Json verts = Json::array();
        std::string vtext;
        for (const auto& v : poly.vertices())
        {
            verts.push_back(Json::array({v.x, v.y}));
            vtext += (vtext.empty() ? "" : " ") + ("(" + std::to_string(v.x) + "," + std::to_string(v.y) + ")");
        }
        if (cfg.output == OutputFormat::pretty)
            out << np.name << ": vertices " << vtext << "; slopes " << slopes_text(poly.slopes()) << "\n";
        else if (cfg.output == OutputFormat::csv)
            out << apoly::csv_field(np.name) << "," << apoly::csv_field(vtext) << ","
                << apoly::csv_field(slopes_text(poly.slopes())) << "\n";
        else
            list.push_back({{"name", np.name}, {"vertices", verts}, {"slopes", slopes_json(poly.slopes())}});
    }
    if (cfg.output == OutputFormat::json)
    {
        Json j = envelope(cfg);
        j["polygons"] = list;
        out << j.dump(2) << "\n";
    }
    return 0;
}

inline int cmd_criterion(const RunConfig& cfg, std::ostream& out)
{
    MultiPoly f1, f2;
    std::string n1, n2;
    if (cfg.input_path)
    {
        if (cfg.k1.empty() || cfg.k2.empty())
            throw UsageError("criterion with --input needs --k1 and --k2");
        const auto rows = read_input(cfg);
        f1 = find_named(rows, cfg.k1);
        f2 = find_named(rows, cfg.k2);
        n1 = cfg.k1;
        n2 = cfg.k2;
    }
    else
    {
        f1 = apoly::a_polynomial(twistknot::build_model(cfg.q1));
        f2 = apoly::a_polynomial(twistknot::build_model(cfg.q2));
        n1 = "q=" + std::to_string(cfg.q1);
        n2 = "q=" + std::to_string(cfg.q2);
    }
    const auto r = apoly::coprimality_criterion(f1, f2);
    switch (cfg.output)
    {
        case OutputFormat::pretty:
            out << n1 << " vs " << n2 << ": " << apoly::to_string(r.verdict) << " (route: " << r.route() << ")\n"
                << "SS1 = " << slopes_text(r.slopes1) << ", SS2^-1 = " << slopes_text(r.slopes2_inverted)
                << ", common = " << slopes_text(r.common) << "\n";
            break;
        case OutputFormat::csv:
            csv_preamble(cfg, out);
            out << "k1,k2,verdict,route,common\n"
                << apoly::csv_field(n1) << "," << apoly::csv_field(n2) << "," << apoly::to_string(r.verdict) << ","
                << r.route() << "," << apoly::csv_field(slopes_text(r.common)) << "\n";
            break;
        case OutputFormat::json:
        {
            Json j = envelope(cfg);
            j["k1"] = n1;
            j["k2"] = n2;
            j["coprime"] = r.coprime();
            j["route"] = r.route();
            j["verdict"] = apoly::to_string(r.verdict);
            j["slopes1"] = slopes_json(r.slopes1);
            j["slopes2"] = slopes_json(r.slopes2);
            j["slopes2_inverted"] = slopes_json(r.slopes2_inverted);
            j["common"] = slopes_json(r.common);
            if (r.gcd)
                j["gcd"] = polyring::to_json(*r.gcd);
            out << j.dump(2) << "\n";
        }
    }
    return 0;
}

inline std::vector<std::string> ascending_coefficients(const MultiPoly& p)
{
    std::vector<std::string> c(static_cast<std::size_t>(p.degree(0)) + 1, "0");
    for (const auto& [e, v] : p.terms())
        c[static_cast<std::size_t>(e[0])] = v.get_str();
    return c;
}

inline int cmd_splice_eq(const RunConfig& cfg, std::ostream& out)
{
    const auto sys = splice::splice_equation(cfg.q1, cfg.q2);
    const auto coeffs = ascending_coefficients(sys.xi_equation);
    const int degree = sys.xi_equation.degree(0);
    switch (cfg.output)
    {
        case OutputFormat::pretty:
        {
            out << "degree " << degree << "\n" << polyring::to_string(sys.xi_equation) << "\n"
                << "coefficients (ascending):";
            for (const auto& c : coeffs)
                out << " " << c;
            out << "\n";
            break;
        }
        case OutputFormat::csv:
            csv_preamble(cfg, out);
            out << "power,coefficient\n";
            for (std::size_t k = 0; k < coeffs.size(); ++k)
                out << k << "," << coeffs[k] << "\n";
            break;
        case OutputFormat::json:
        {
            Json j = envelope(cfg);
            j["q1"] = cfg.q1;
            j["q2"] = cfg.q2;
            j["degree"] = degree;
            j["coefficients"] = coeffs;
            j["equation"] = polyring::to_json(sys.xi_equation);
            j["xi2_equation"] = polyring::to_json(sys.xi2_equation);
            j["relation1"] = polyring::to_json(sys.relation1);
            j["relation2"] = polyring::to_json(sys.relation2);
            out << j.dump(2) << "\n";
        }
    }
    return 0;
}

inline int cmd_rt(const RunConfig& cfg, std::ostream& out)
{
    const auto rep = splice::rt_set(cfg.q1, cfg.q2, cfg.tolerances);
    const auto& chars = rep.inventory.characters;
    switch (cfg.output)
    {
        case OutputFormat::pretty:
        {
            int genuine = 0;
            for (const auto& c : chars)
                genuine += c.mirror() ? 0 : 1;
            out << "splice (" << cfg.q1 << ", " << cfg.q2 << "): equation of degree "
                << rep.system.xi_equation.degree(0) << "\n"
                << "criterion: " << apoly::to_string(rep.criterion.verdict) << "\n"
                << "characters: " << genuine << " genuine, " << chars.size() - genuine << " mirror, "
                << rep.inventory.spurious.size() << " spurious roots\n"
                << "RT set:";
            for (cd v : rep.rt_set)
                out << " " << complex_text(v);
            out << "\n";
            break;
        }
        case OutputFormat::csv:
            csv_preamble(cfg, out);
            out << "xi1_re,xi1_im,xi2_re,xi2_im,s1_re,s1_im,t1_re,t1_im,s2_re,s2_im,t2_re,t2_im,c2_re,c2_im,"
                   "mirror,acyclic,torsion_re,torsion_im,residual\n";
            out << std::setprecision(17);
            for (const auto& c : chars)
            {
                for (cd z : {c.xi1, c.xi2, c.s1, c.t1, c.s2, c.t2, c.c_squared})
                    out << z.real() << "," << z.imag() << ",";
                out << (c.mirror() ? "true" : "false") << "," << (c.acyclic_on_torus ? "true" : "false") << ","
                    << c.torsion_product.real() << "," << c.torsion_product.imag() << "," << c.residual() << "\n";
            }
            break;
        case OutputFormat::json:
        {
            Json j = envelope(cfg);
            j["q1"] = cfg.q1;
            j["q2"] = cfg.q2;
            j["equation"] = polyring::to_json(rep.system.xi_equation);
            Json cs = Json::array();
            for (const auto& c : chars)
            {
                cs.push_back({{"xi1", complex_json(c.xi1)},
                              {"xi2", complex_json(c.xi2)},
                              {"s1", complex_json(c.s1)},
                              {"t1", complex_json(c.t1)},
                              {"s2", complex_json(c.s2)},
                              {"t2", complex_json(c.t2)},
                              {"c2", complex_json(c.c_squared)},
                              {"mirror", c.mirror()},
                              {"acyclic", c.acyclic_on_torus},
                              {"torus_dims", c.torus_dims},
                              {"torsion", complex_json(c.torsion_product)},
                              {"torsion_1", complex_json(c.torsion_1)},
                              {"torsion_2", complex_json(c.torsion_2)},
                              {"residual", c.residual()}});
            }
            j["characters"] = cs;
            Json sp = Json::array();
            for (const auto& s : rep.inventory.spurious)
                sp.push_back({{"xi", complex_json(s.xi)}, {"reason", s.reason}});
            j["spurious"] = sp;
            Json rt = Json::array();
            for (cd v : rep.rt_set)
                rt.push_back(complex_json(v));
            j["rt_set"] = rt;
            j["criterion"] = {{"coprime", rep.criterion.coprime()},
                              {"route", rep.criterion.route()},
                              {"verdict", apoly::to_string(rep.criterion.verdict)}};
            out << j.dump(2) << "\n";
        }
    }
    return 0;
}

inline int cmd_bend(const RunConfig& cfg, std::ostream& out)
{
    const auto inv = splice::solve_characters(splice::splice_equation(cfg.q1, cfg.q2), cfg.tolerances);
    std::vector<const splice::SpliceCharacter*> candidates;
    for (const auto& c : inv.characters)
        if (!c.mirror() && c.acyclic_on_torus)
            candidates.push_back(&c);
    if (candidates.empty())
        throw SolverFailure("no genuine acyclic character to bend", {});
    if (cfg.index < 0 || static_cast<std::size_t>(cfg.index) >= candidates.size())
        throw UsageError("--index out of range: " + std::to_string(candidates.size()) + " genuine acyclic characters");
    const auto& c = *candidates[static_cast<std::size_t>(cfg.index)];
    const cd a(cfg.a_re, cfg.a_im);
    const auto r = splice::bending_family(twistknot::build_model(cfg.q1), c.s1, c.t1, c.s2, c.t2, c.c_squared, a);
    switch (cfg.output)
    {
        case OutputFormat::pretty:
            out << "character xi1 = " << complex_text(c.xi1) << ", a = " << complex_text(a) << "\n"
                << "tr(A Y1 A^-1 X2) = " << complex_text(r.trace) << " (closed form " << complex_text(r.closed_form)
                << ")\n"
                << "tr(A Y1 A^-1 Y2) = " << complex_text(r.mixed_trace) << "\n"
                << "|A X1 A^-1 - X1| = " << r.meridian_defect << ", |A L1 A^-1 - L1| = " << r.longitude_defect
                << "\n";
            break;
        case OutputFormat::csv:
            csv_preamble(cfg, out);
            out << std::setprecision(17) << "xi1_re,xi1_im,a_re,a_im,trace_re,trace_im,closed_re,closed_im,"
                                            "mixed_re,mixed_im,meridian_defect,longitude_defect\n";
            for (cd z : {c.xi1, a, r.trace, r.closed_form, r.mixed_trace})
                out << z.real() << "," << z.imag() << ",";
            out << r.meridian_defect << "," << r.longitude_defect << "\n";
            break;
        case OutputFormat::json:
        {
            Json j = envelope(cfg);
            j["q1"] = cfg.q1;
            j["q2"] = cfg.q2;
            j["xi1"] = complex_json(c.xi1);
            j["a"] = complex_json(a);
            j["A"] = Json::array({Json::array({complex_json(r.A.a11), complex_json(r.A.a12)}),
                                  Json::array({complex_json(r.A.a21), complex_json(r.A.a22)})});
            j["trace"] = complex_json(r.trace);
            j["closed_form"] = complex_json(r.closed_form);
            j["mixed_trace"] = complex_json(r.mixed_trace);
            j["meridian_defect"] = r.meridian_defect;
            j["longitude_defect"] = r.longitude_defect;
            out << j.dump(2) << "\n";
        }
    }
    return 0;
}

/** One line per criterion: "PASS  3  name  (0.12 s / 5 s)  detail". */
inline void print_acceptance(const std::vector<verify::CriterionOutcome>& results, std::ostream& out)
{
    for (const auto& r : results)
    {
        out << (r.passed() ? "PASS" : "FAIL") << "  " << std::setw(2) << r.id << "  " << r.name << "  ("
            << std::fixed << std::setprecision(3) << r.seconds << " s / " << std::setprecision(0) << r.limit_seconds
            << " s)" << std::defaultfloat << std::setprecision(6);
        if (!r.within_limit())
            out << "  [over time limit]";
        out << "  " << r.detail << "\n";
    }
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out)
{
    const auto results = verify::run_acceptance(cfg.seed);
    bool all = true;
    for (const auto& r : results)
        all = all && r.passed();
    switch (cfg.output)
    {
        case OutputFormat::json:
        {
            Json j = envelope(cfg);
            Json list = Json::array();
            for (const auto& r : results)
                list.push_back({{"id", r.id},
                                {"name", r.name},
                                {"passed", r.passed()},
                                {"check_passed", r.check_passed},
                                {"seconds", r.seconds},
                                {"limit_seconds", r.limit_seconds},
                                {"detail", r.detail}});
            j["criteria"] = list;
            j["all_passed"] = all;
            out << j.dump(2) << "\n";
            break;
        }
        case OutputFormat::csv:
            csv_preamble(cfg, out);
            out << "id,name,passed,seconds,limit_seconds,detail\n";
            for (const auto& r : results)
                out << r.id << "," << apoly::csv_field(r.name) << "," << (r.passed() ? "true" : "false") << ","
                    << r.seconds << "," << r.limit_seconds << "," << apoly::csv_field(r.detail) << "\n";
            break;
        case OutputFormat::pretty:
            print_acceptance(results, out);
            out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
    }
    return all ? 0 : 1;
}

}   // namespace detail

/** Execute a parsed configuration; errors propagate as exceptions. */
inline int run(const RunConfig& cfg, std::ostream& out)
{
    cfg.tolerances.validate();
    if (cfg.command == "riley")
        return detail::cmd_riley(cfg, out);
    if (cfg.command == "apoly")
        return detail::cmd_apoly(cfg, out);
    if (cfg.command == "newton")
        return detail::cmd_newton(cfg, out);
    if (cfg.command == "criterion")
        return detail::cmd_criterion(cfg, out);
    if (cfg.command == "splice-eq")
        return detail::cmd_splice_eq(cfg, out);
    if (cfg.command == "rt")
        return detail::cmd_rt(cfg, out);
    if (cfg.command == "bend")
        return detail::cmd_bend(cfg, out);
    if (cfg.command == "verify")
        return detail::cmd_verify(cfg, out);
    throw UsageError("unknown command '" + cfg.command + "'");
}

/**
 * Parse arguments, apply the SPLICE_TORSION_SEED override and run. Never
 * throws; returns the process exit status.
 */
inline int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Character varieties, A-polynomials and Reidemeister torsion of twist-knot splices", "knots"};
    app.require_subcommand(1, 1);

    const std::map<std::string, OutputFormat> formats{
        {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"pretty", OutputFormat::pretty}};

    auto common = [&](CLI::App* sub) {
        sub->add_option("--output", cfg.output, "json, csv or pretty")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--seed", cfg.seed, "seed for randomized checks (SPLICE_TORSION_SEED overrides)");
        sub->add_option("--root-cert", cfg.tolerances.root_cert, "root certification tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--dedup", cfg.tolerances.dedup, "torsion deduplication distance")->check(CLI::PositiveNumber);
        sub->add_option("--rank", cfg.tolerances.rank, "relative rank threshold")->check(CLI::PositiveNumber);
    };
    auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        common(sub);
        return sub;
    };

    auto* riley = add("riley", "Riley polynomial of the twist knot J(2,2q) in (xi, t)");
    riley->add_option("--q", cfg.q, "twist parameter (nonzero)")->required();
    auto* ap = add("apoly", "A-polynomial of J(2,2q)");
    ap->add_option("--q", cfg.q, "twist parameter (nonzero)")->required();
    auto* newton = add("newton", "Newton polygon and slope set");
    newton->add_option("--q", cfg.q, "twist parameter (nonzero)");
    newton->add_option("--input", cfg.input_path, "CSV of A-polynomials (name, vars, terms)");
    auto* crit = add("criterion", "coprimality of A1 and A2^T via slopes or gcd");
    crit->add_option("--q1", cfg.q1, "first twist parameter");
    crit->add_option("--q2", cfg.q2, "second twist parameter");
    crit->add_option("--input", cfg.input_path, "CSV of A-polynomials (name, vars, terms)");
    crit->add_option("--k1", cfg.k1, "name of the first polynomial in the CSV");
    crit->add_option("--k2", cfg.k2, "name of the second polynomial in the CSV");
    auto* seq = add("splice-eq", "univariate trace equation of the splice");
    seq->add_option("--q1", cfg.q1, "first twist parameter")->required();
    seq->add_option("--q2", cfg.q2, "second twist parameter")->required();
    auto* rt = add("rt", "characters and the Reidemeister torsion set of the splice");
    rt->add_option("--q1", cfg.q1, "first twist parameter")->required();
    rt->add_option("--q2", cfg.q2, "second twist parameter")->required();
    auto* bend = add("bend", "bending deformation at a genuine character");
    bend->add_option("--q1", cfg.q1, "first twist parameter")->required();
    bend->add_option("--q2", cfg.q2, "second twist parameter")->required();
    bend->add_option("--a", cfg.a_re, "bending parameter (real part)");
    bend->add_option("--a-im", cfg.a_im, "bending parameter (imaginary part)");
    bend->add_option("--index", cfg.index, "which genuine acyclic character (sorted order)");
    add("verify", "run the acceptance suite");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    if (const char* env = std::getenv("SPLICE_TORSION_SEED"); env != nullptr && *env != '\0')
    {
        try
        {
            std::size_t used = 0;
            cfg.seed = std::stoull(env, &used);
            if (used != std::string(env).size())
                throw std::invalid_argument("trailing characters");
        }
        catch (const std::exception&)
        {
            err << "error: SPLICE_TORSION_SEED must be a non-negative integer\n";
            return 2;
        }
    }

    try
    {
        return run(cfg, out);
    }
    catch (const UsageError& e)
    {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const UnknotError& e)
    {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const PreconditionError& e)
    {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const ParseError& e)
    {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const Error& e)
    {
        err << "certification failure: " << e.what() << "\n";
        return 1;
    }
    catch (const std::exception& e)
    {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}   // namespace knots::cli

#endif
