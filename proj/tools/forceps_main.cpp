#include <iostream>
#include <string>
#include <vector>

#include "forceps/cli.hpp"

int main(int argc, char** argv)
{
    std::ios::sync_with_stdio(false);
    return forceps::cli::run(std::vector<std::string>(argv, argv + argc), std::cin, std::cout, std::cerr);
}
