#include <iostream>

#include "osc/cli/commands.hpp"

int main(int argc, char** argv) { return osc::cli::run_cli(argc, argv, std::cout, std::cerr); }
