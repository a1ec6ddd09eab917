#include <iostream>

#include "ajf/cli.hpp"

int main(int argc, char** argv) { return ajf::cli::run(argc, argv, std::cout, std::cerr); }
