#include <iostream>
#include <string>
#include <vector>

#include "kdefect/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kdefect::run(std::move(args), std::cout, std::cerr);
}
