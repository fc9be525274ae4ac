#include <iostream>

#include "kdclub/cli.hpp"

int main(int argc, char** argv) { return kdclub::run_cli(argc, argv, std::cout, std::cerr); }
