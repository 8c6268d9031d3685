#include <iostream>

#include "vrsmooth/cli.hpp"

int main(int argc, char** argv) { return vrsmooth::cli::run(argc, argv, std::cout, std::cerr); }
