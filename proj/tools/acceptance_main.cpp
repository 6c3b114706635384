// Runs every acceptance criterion and prints one pass/fail line for each.
// Exit status is 0 only if all criteria pass within their time limits.

#include <cstdlib>
#include <iostream>
#include <string>

#include "knots/cli/app.hpp"
#include "knots/verify/acceptance.hpp"

int main()
{
    std::uint64_t seed = 2024;
    if (const char* env = std::getenv("SPLICE_TORSION_SEED"); env != nullptr && *env != '\0')
        seed = std::stoull(env);
    const auto results = knots::verify::run_acceptance(seed);
    knots::cli::detail::print_acceptance(results, std::cout);
    int failed = 0;
    for (const auto& r : results)
        failed += r.passed() ? 0 : 1;
    std::cout << (failed == 0 ? "all " + std::to_string(results.size()) + " criteria passed"
                              : std::to_string(failed) + " criteria failed")
              << "\n";
    return failed == 0 ? 0 : 1;
}
