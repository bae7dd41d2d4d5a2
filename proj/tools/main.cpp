#include <iostream>

#include "xiform_cli/commands.hpp"

int main(int argc, char** argv) { return xiform::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
