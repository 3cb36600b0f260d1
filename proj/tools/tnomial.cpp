#include <iostream>

#include "tnomial/cli.hpp"

int main(int argc, char** argv) { return tnomial::cli::main(argc, argv, std::cout, std::cerr); }
