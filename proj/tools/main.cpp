#include <iostream>
#include <string>
#include <vector>

#include "sympchar/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv, argv + argc);
    return sympchar::cli::run(args, std::cout, std::cerr);
}
