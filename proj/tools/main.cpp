#include <iostream>
#include <vector>

#include "burst/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return burst::cli::run(args, std::cout, std::cerr);
}
