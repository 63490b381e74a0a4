#include <iostream>
#include <string>
#include <vector>

#include "abelrank/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return abelrank::run_cli(args, std::cout, std::cerr);
}
