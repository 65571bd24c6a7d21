#include <iostream>

#include "cspec/cli.hpp"

int main(int argc, char** argv) { return cspec::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
