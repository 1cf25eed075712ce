#include "monocheck/cli/commands.hpp"

#include <iostream>

int main(int argc, char** argv) { return monocheck::cli::run(argc, argv, std::cout, std::cerr); }
