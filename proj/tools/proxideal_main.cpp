#include <iostream>

#include "proxideal/cli.hpp"

int main(int argc, char** argv) { return proxideal::run_cli(argc, argv, std::cout, std::cerr); }
