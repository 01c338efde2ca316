#include <iostream>
#include <string>
#include <vector>

#include "weyrkit/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return weyrkit::cli::run(args, std::cout, std::cerr);
}
