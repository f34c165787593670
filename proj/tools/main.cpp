#include <iostream>
#include <string>
#include <vector>

#include "commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return ilpq::tools::run(args, std::cout, std::cerr);
}
