#include "cli.hpp"

#include <iostream>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv, argv + argc);
    return nonrep::cli::run(args, std::cout, std::cerr);
}
