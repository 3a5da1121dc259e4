#include "unidom/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return unidom::run_cli(argc, argv, std::cout, std::cerr); }
