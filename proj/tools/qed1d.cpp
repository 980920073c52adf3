#include <iostream>
#include <string>
#include <vector>

#include "qed1d/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qed1d::cli::run(args, std::cout, std::cerr);
}
