#include <iostream>

#include "maschke/cli/run.hpp"

int main(int argc, char** argv) { return maschke::cli::run(argc, argv, std::cout, std::cerr); }
