#include <iostream>

#include "qbill/cli.hpp"

int main(int argc, char** argv) {
    return qbill::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
