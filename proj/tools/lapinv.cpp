#include <iostream>

#include "lapinv/cli.hpp"

int main(int argc, char** argv) { return lapinv::cli::run_cli(argc, argv, std::cout, std::cerr); }
