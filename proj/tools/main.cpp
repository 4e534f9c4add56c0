#include <iostream>

#include "thinwall/cli.hpp"

int main(int argc, char** argv) { return thinwall::run_cli(argc, argv, std::cout, std::cerr); }
