#include <iostream>
#include <string>
#include <vector>

#include "singeq/cli/commands.hpp"

int main(int argc, char** argv)
{
    const std::vector<std::string> args(argv + 1, argv + argc);
    return singeq::cli::run(args, std::cout, std::cerr);
}
