#include <iostream>

#include "subsec/cli.hpp"

int main(int argc, char** argv) { return subsec::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
