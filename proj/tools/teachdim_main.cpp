#include <iostream>

#include "teachdim/cli.hpp"

int main(int argc, char** argv) { return teachdim::cli::run(argc, argv, std::cout, std::cerr); }
