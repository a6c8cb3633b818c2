#include <iostream>

#include "twyang/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return twyang::run(args, std::cout, std::cerr);
}
