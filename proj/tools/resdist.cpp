#include <iostream>

#include "resdist/cli.hpp"

int main(int argc, char** argv) { return resdist::cli::main(argc, argv, std::cout, std::cerr); }
