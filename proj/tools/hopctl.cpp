#include <iostream>

#include "hopset/cli.hpp"

int main(int argc, char** argv) { return hopset::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
