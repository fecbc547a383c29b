#include <iostream>

#include "hol/cli.hpp"

int main(int argc, char** argv) { return hol::cli::run(argc, argv, std::cout, std::cerr); }
