#include <iostream>

#include <cyclicff/cli.hpp>

int main(int argc, char** argv) { return cyclicff::run_cli(argc, argv, std::cout, std::cerr); }
