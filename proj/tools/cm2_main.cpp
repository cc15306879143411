#include <iostream>

#include "cm2/cli.hpp"

int main(int argc, char** argv) { return cm2::cli::run(argc, argv, std::cout, std::cerr); }
