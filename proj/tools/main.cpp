#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return bcube::cli::cliMain(argc, argv, std::cout, std::cerr); }
