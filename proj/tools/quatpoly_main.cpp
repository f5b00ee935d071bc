#include <iostream>
#include <vector>

#include "quatpoly/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qp::cli::run(std::move(args), std::cout, std::cerr);
}
