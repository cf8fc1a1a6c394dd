#include <iostream>
#include <vector>

#include "empl/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return empl::cli::run_cli(args, std::cout, std::cerr);
}
