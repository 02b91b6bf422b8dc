#include <iostream>

#include "pleth/cli.hpp"

int main(int argc, char** argv) { return pleth::cli::run(argc, argv, std::cout, std::cerr); }
