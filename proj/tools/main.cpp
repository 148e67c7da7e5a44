#include <iostream>

#include "radixecon/cli.hpp"

int main(int argc, char** argv) {
    return radixecon::cli::run(argc, argv, std::cout, std::cerr);
}
