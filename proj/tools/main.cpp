#include <iostream>

#include "winshift/cli.hpp"

int main(int argc, char** argv) {
    return winshift::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
