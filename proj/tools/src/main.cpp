#include "fss/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fss::run_cli(std::move(args), std::cin, std::cout, std::cerr);
}
