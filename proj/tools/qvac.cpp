#include <iostream>

#include "qvac/cli.hpp"

int main(int argc, char** argv)
{
    return qvac::cli::run(argc, argv, std::cout, std::cerr);
}
