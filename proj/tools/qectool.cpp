#include <iostream>
#include <string>
#include <vector>

#include "qec/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qec::cli::run(args, std::cout, std::cerr);
}
