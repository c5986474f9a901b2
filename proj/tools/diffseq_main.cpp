#include <iostream>

#include "diffseq/cli.hpp"

int main(int argc, char** argv) { return diffseq::run_cli(argc, argv, std::cout, std::cerr); }
