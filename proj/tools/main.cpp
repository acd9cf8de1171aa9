#include <iostream>

#include "stringart/cli.hpp"

int main(int argc, char** argv) {
    return stringart::cli::run(argc, argv, std::cout, std::cerr);
}
