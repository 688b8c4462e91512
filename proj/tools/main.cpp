#include <iostream>

#include "pconvex/cli.hpp"

int main(int argc, char** argv) { return pconvex::run_cli(argc, argv, std::cout, std::cerr); }
