#include <iostream>

#include "twoweight/cli.hpp"

int main(int argc, char** argv) { return twoweight::run_cli(argc, argv, std::cout, std::cerr); }
