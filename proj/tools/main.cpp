#include <iostream>

#include "chirality_lab/report_io.hpp"

int main(int argc, char** argv) { return chirality_lab::run_cli(argc, argv, std::cout, std::cerr); }
