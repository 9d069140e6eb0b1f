#include <iostream>

#include "hcover/cli.hpp"

int main(int argc, char** argv) { return hcover::run_cli(argc, argv, std::cout, std::cerr); }
