#include <iostream>

#include "lopt/cli.hpp"

int main(int argc, char** argv) { return lopt::run_cli(argc, argv, std::cout, std::cerr); }
