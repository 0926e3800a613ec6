#include <iostream>
#include <string>
#include <vector>

#include "hdline/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return hdline::cli::run(args, std::cout, std::cerr);
}
