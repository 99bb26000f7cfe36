#include <iostream>

#include "succdist_cli.hpp"

int main(int argc, char** argv) { return succdist::cli::run_cli(argc, argv, std::cout, std::cerr); }
