#include <iostream>

#include "gapsched/cli.hpp"

int main(int argc, char** argv) { return gapsched::run_cli(argc, argv, std::cout, std::cerr); }
