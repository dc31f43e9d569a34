#include <iostream>

#include "qcoh/cli.hpp"

int main(int argc, char** argv) { return qcoh::run_cli(argc, argv, std::cout, std::cerr); }
