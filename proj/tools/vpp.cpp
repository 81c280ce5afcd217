#include <iostream>

#include "vpp/cli.hpp"

int main(int argc, char **argv)
{
    return vpp::cli::run(argc, argv, std::cout, std::cerr);
}
