#include <iostream>

#include "hyperseq/cli.hpp"

int main(int argc, char** argv) { return hyperseq::cli::run(argc, argv, std::cout, std::cerr); }
