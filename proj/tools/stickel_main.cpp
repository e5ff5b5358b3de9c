#include <iostream>
#include <string>
#include <vector>

#include "stickel/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return stickel::run(args, std::cout, std::cerr);
}
