#include <iostream>

#include "unicover/cli.hpp"

int main(int argc, char** argv) { return unicover::cli::run(argc, argv, std::cout, std::cerr); }
