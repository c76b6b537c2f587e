#include <iostream>

#include "freefield/cli.hpp"

int main(int argc, char** argv) { return freefield::cli::run(argc, argv, std::cout, std::cerr); }
