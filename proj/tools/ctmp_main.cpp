#include <iostream>
#include <string>
#include <vector>

#include "ctmp/bench/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ctmp::run_cli(args, std::cout, std::cerr);
}
