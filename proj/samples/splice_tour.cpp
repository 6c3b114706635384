// A short tour of the library: Riley polynomial, A-polynomial, the
// coprimality criterion and the torsion set of a splice.
//
//   ./splice_tour [q1 q2]

#include <cstdlib>
#include <iostream>

#include "knots/knots.hpp"

int main(int argc, char** argv)
{
    const int q1 = argc > 2 ? std::atoi(argv[1]) : 1;
    const int q2 = argc > 2 ? std::atoi(argv[2]) : -1;
    using namespace knots;

    for (int q : {q1, q2})
    {
        const auto model = twistknot::build_model(q);
        std::cout << "J(2," << 2 * q << ")\n"
                  << "  Riley:        " << polyring::to_grouped_string(twistknot::riley_xi(model), "t") << "\n"
                  << "  A-polynomial: " << polyring::to_string(apoly::a_polynomial(model)) << "\n";
    }

    const auto report = splice::rt_set(q1, q2);
    std::cout << "splice equation degree: " << report.system.xi_equation.degree(0) << "\n"
              << "criterion: " << apoly::to_string(report.criterion.verdict) << "\n"
              << "characters: " << report.inventory.characters.size() << "\n"
              << "torsion values:\n";
    for (auto v : report.rt_set)
        std::cout << "  " << v.real() << (v.imag() < 0 ? " - " : " + ") << std::abs(v.imag()) << "i\n";
    return 0;
}
