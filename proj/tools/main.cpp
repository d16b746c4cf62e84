#include <iostream>

#include "polycut/cli.hpp"

int main(int argc, char **argv) { return polycut::run_cli(argc, argv, std::cout, std::cerr); }
