#include <iostream>

#include "tra/cli.hpp"

int main(int argc, char** argv) { return tra::run_cli(argc, argv, std::cout, std::cerr); }
