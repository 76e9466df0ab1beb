#include <iostream>

#include "lexsamp/cli.hpp"

int main(int argc, char** argv) {
    return lexsamp::cli::run(argc, argv, std::cout, std::cerr);
}
