#include <iostream>

#include "catmat/cli.hpp"

int main(int argc, char** argv) { return catmat::cli::run(argc, argv, std::cout, std::cerr); }
