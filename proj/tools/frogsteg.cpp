#include <iostream>

#include "frogsteg/cli.hpp"

int main(int argc, char** argv) { return frogsteg::cli::run(argc, argv, std::cout, std::cerr); }
