#include <iostream>

#include "circstab_cli/cli.hpp"

int main(int argc, char** argv) { return circstab::cli::run(argc, argv, std::cout, std::cerr); }
