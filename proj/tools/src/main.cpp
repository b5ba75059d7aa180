#include <iostream>

#include "sextic_cli/cli.hpp"

int main(int argc, char** argv) {
    return sextic::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
