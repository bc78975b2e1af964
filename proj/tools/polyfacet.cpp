#include "polyfacet/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    return polyfacet::cli_main(argc, argv, std::cout, std::cerr);
}
