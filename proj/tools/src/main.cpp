#include <iostream>

#include "cblock/cli.hpp"

int main(int argc, char** argv) { return cblock::cli::run(argc, argv, std::cout, std::cerr); }
