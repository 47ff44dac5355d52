#include <iostream>

#include "mfk/commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return mfk::run_cli(args, std::cout, std::cerr);
}
