#include <iostream>

#include "polyface/cli.hpp"

int main(int argc, char** argv) {
    return polyface::run_cli(argc, argv, std::cout, std::cerr);
}
