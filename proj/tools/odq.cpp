#include <iostream>

#include "odq/cli.hpp"

int main(int argc, char** argv) { return odq::cli::run(argc, argv, std::cout, std::cerr); }
