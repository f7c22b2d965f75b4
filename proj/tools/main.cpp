#include <iostream>

#include "woct/cli.hpp"

int main(int argc, char** argv) { return woct::run_cli(argc, argv, std::cout, std::cerr); }
