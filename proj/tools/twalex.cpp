#include <iostream>

#include "twalex/cli.hpp"

int main(int argc, char** argv) { return twalex::cli::run(argc, argv, std::cout, std::cerr); }
