#include <iostream>

#include "affgr/cli.hpp"

int main(int argc, char** argv) { return affgr::run_cli(argc, argv, std::cout, std::cerr); }
