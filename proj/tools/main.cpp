#include <iostream>
#include <string>
#include <vector>

#include "jackkerov/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return jackkerov::run_cli(args, std::cout, std::cerr);
}
