#include "conjclass/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return conjclass::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
