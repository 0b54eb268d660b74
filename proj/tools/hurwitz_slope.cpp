#include <iostream>

#include "hurwitz/cli.hpp"

int main(int argc, char** argv) { return hurwitz::cli::main(argc, argv, std::cout, std::cerr); }
