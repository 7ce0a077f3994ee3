#include "zpoly/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return zpoly::cli_main(argc, argv, std::cout, std::cerr); }
