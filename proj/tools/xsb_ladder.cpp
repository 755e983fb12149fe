#include "xsb/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return xsb::cli::main_entry(argc, argv, std::cout, std::cerr); }
