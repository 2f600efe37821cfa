#include <iostream>

#include "gpslice/cli.hpp"

int main(int argc, char** argv) { return gpslice::run_cli(argc, argv, std::cout, std::cerr); }
