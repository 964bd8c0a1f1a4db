#include <iostream>

#include "hyperbessel/cli/app.hpp"

int main(int argc, char** argv) { return hyperbessel::cli::run(argc, argv, std::cout, std::cerr); }
