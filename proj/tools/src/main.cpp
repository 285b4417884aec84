#include <iostream>

#include "slopepoly/app/cli.hpp"

int main(int argc, char** argv) { return slopepoly::app::run_cli(argc, argv, std::cout, std::cerr); }
