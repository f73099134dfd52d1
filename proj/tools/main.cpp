#include <iostream>
#include <string>
#include <vector>

#include "grodel/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return grodel::run_cli(args, std::cout, std::cerr);
}
