#include "eisprod_cli/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return eisprod::cli::run_cli(argc, argv, std::cout, std::cerr);
}
