#include <iostream>

#include "schurpar/cli.hpp"

int main(int argc, char** argv) { return schurpar::run_cli(argc, argv, std::cout, std::cerr); }
