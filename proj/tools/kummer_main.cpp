#include <iostream>
#include <vector>

#include "kummer/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return kummer::run(args, std::cout, std::cerr);
}
