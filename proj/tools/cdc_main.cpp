#include <iostream>

#include "cdc/cli.hpp"

int main(int argc, char** argv) { return cdc::run_cli(argc, argv, std::cout, std::cerr); }
