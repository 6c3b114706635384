#include <iostream>

#include "knots/cli/app.hpp"

int main(int argc, char** argv)
{
    return knots::cli::main_with_args(argc, argv, std::cout, std::cerr);
}
