#include <iostream>

#include "cdbent/cli.hpp"

int main(int argc, char** argv) {
    return cdbent::cli::run_cli(argc, argv, std::cout, std::cerr);
}
