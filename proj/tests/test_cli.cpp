#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "knots/cli/app.hpp"

namespace {

struct CliRun
{
    int status;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args)
{
    args.insert(args.begin(), "knots");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int status = knots::cli::main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::string sample_csv()
{
    return std::string(KNOTS_SOURCE_DIR) + "/samples/apolys.csv";
}

}   // namespace

TEST(Cli, TrefoilTorsionSetJson)
{
    CliRun r = run({"rt", "--q1", "1", "--q2", "1", "--output", "json"});
    ASSERT_EQ(r.status, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["rt_set"], nlohmann::json::parse("[[4.0, 0.0]]"));
    EXPECT_EQ(j["criterion"]["coprime"], true);
    EXPECT_EQ(j["criterion"]["route"], "slopes");
    EXPECT_EQ(j["characters"].size(), 35u);
    EXPECT_EQ(j["tolerances"]["root_cert"], 1e-9);
    EXPECT_EQ(j["tolerances"]["dedup"], 1e-7);
    EXPECT_EQ(j["tolerances"]["rank"], 1e-8);
    EXPECT_TRUE(j["convention"].is_string());
}

TEST(Cli, RileyPretty)
{
    CliRun r = run({"riley", "--q", "-1", "--output", "pretty"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "t^2 - (xi^2-5) t - xi^2 + 5\n");
}

TEST(Cli, SpliceEquationDegree36)
{
    CliRun r = run({"splice-eq", "--q1", "1", "--q2", "1"});
    ASSERT_EQ(r.status, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["degree"], 36);
    ASSERT_EQ(j["coefficients"].size(), 37u);
    EXPECT_EQ(j["coefficients"][0], "2");
    EXPECT_EQ(j["coefficients"][1], "1");
    EXPECT_EQ(j["coefficients"][36], "1");
}

TEST(Cli, ByteIdenticalRepeatedRuns)
{
    for (std::vector<std::string> args : {std::vector<std::string>{"rt", "--q1", "1", "--q2", "-1"},
                                          std::vector<std::string>{"apoly", "--q", "2"},
                                          std::vector<std::string>{"bend", "--q1", "1", "--q2", "1", "--a", "1.7"}})
    {
        CliRun a = run(args), b = run(args);
        EXPECT_EQ(a.status, 0);
        EXPECT_EQ(a.out, b.out);
    }
}

TEST(Cli, EveryReportCarriesTolerancesAndConvention)
{
    for (std::vector<std::string> args :
         {std::vector<std::string>{"riley", "--q", "2"}, std::vector<std::string>{"apoly", "--q", "1"},
          std::vector<std::string>{"newton", "--q", "-1"}, std::vector<std::string>{"criterion", "--q1", "1", "--q2", "2"},
          std::vector<std::string>{"splice-eq", "--q1", "-1", "--q2", "-1"}})
    {
        CliRun r = run(args);
        ASSERT_EQ(r.status, 0) << args[0] << ": " << r.err;
        auto j = nlohmann::json::parse(r.out);
        EXPECT_TRUE(j.contains("tolerances")) << args[0];
        EXPECT_TRUE(j.contains("convention")) << args[0];
    }
    CliRun csv = run({"rt", "--q1", "1", "--q2", "1", "--output", "csv"});
    EXPECT_NE(csv.out.find("# tolerances:"), std::string::npos);
    EXPECT_NE(csv.out.find("# convention:"), std::string::npos);
    // header + preamble (3 lines) + one row per character
    EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 3 + 1 + 35);
}

TEST(Cli, UsageErrorsExitWithTwo)
{
    EXPECT_EQ(run({"riley", "--q", "0"}).status, 2);
    EXPECT_EQ(run({"rt", "--q1", "1", "--q2", "1", "--dedup", "0"}).status, 2);
    EXPECT_EQ(run({"rt", "--q1", "1", "--q2", "1", "--rank", "-1"}).status, 2);
    EXPECT_EQ(run({"splice-eq", "--q1", "1"}).status, 2);
    EXPECT_EQ(run({"frobnicate"}).status, 2);
    EXPECT_EQ(run({"riley", "--q", "1", "--output", "xml"}).status, 2);
    EXPECT_EQ(run({"newton", "--input", "/nonexistent/file.csv"}).status, 2);
}

TEST(Cli, CsvInput)
{
    CliRun r = run({"criterion", "--input", sample_csv(), "--k1", "trefoil", "--k2", "figure_eight"});
    ASSERT_EQ(r.status, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["coprime"], true);
    EXPECT_EQ(j["route"], "slopes");

    CliRun shared = run({"criterion", "--input", sample_csv(), "--k1", "shared_factor", "--k2", "shared_factor"});
    ASSERT_EQ(shared.status, 0);
    EXPECT_EQ(nlohmann::json::parse(shared.out)["coprime"], false);

    EXPECT_EQ(run({"criterion", "--input", sample_csv(), "--k1", "trefoil", "--k2", "nope"}).status, 2);

    CliRun n = run({"newton", "--input", sample_csv(), "--output", "pretty"});
    EXPECT_NE(n.out.find("trefoil: vertices (0,6) (1,0) (2,0) (1,6); slopes {-6, 0}"), std::string::npos);
}

TEST(Cli, MalformedCsvIsAUsageError)
{
    const std::string path = ::testing::TempDir() + "bad_apolys.csv";
    {
        std::ofstream f(path);
        f << "name,vars,terms\nbroken,\"[\"\"L\"\",\"\"M\"\"]\",\"[[[0,0],\"\"x/y\"\"]]\"\n";
    }
    EXPECT_EQ(run({"newton", "--input", path}).status, 2);
}

TEST(Cli, SeedEnvironmentOverride)
{
    ::setenv("SPLICE_TORSION_SEED", "77", 1);
    CliRun r = run({"riley", "--q", "1", "--seed", "5"});
    ::unsetenv("SPLICE_TORSION_SEED");
    EXPECT_EQ(nlohmann::json::parse(r.out)["seed"], 77);
    EXPECT_EQ(nlohmann::json::parse(run({"riley", "--q", "1", "--seed", "5"}).out)["seed"], 5);

    ::setenv("SPLICE_TORSION_SEED", "abc", 1);
    EXPECT_EQ(run({"riley", "--q", "1"}).status, 2);
    ::unsetenv("SPLICE_TORSION_SEED");
}
