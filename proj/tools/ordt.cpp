#include <iostream>

#include "ordt/cli.hpp"

int main(int argc, char** argv) { return ordt::run_cli(argc, argv, std::cout, std::cerr); }
