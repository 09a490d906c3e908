#include "dpe/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return dpe::cli::run(argc, argv, std::cout, std::cerr); }
