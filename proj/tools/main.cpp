#include <iostream>

#include "aztec/cli.hpp"

int main(int argc, char** argv) { return aztec::run_cli(argc, argv, std::cout, std::cerr); }
