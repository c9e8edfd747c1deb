#include <iostream>

#include "rrefkit/cli.hpp"

int main(int argc, char** argv) { return rrefkit::cli::run_command_line(argc, argv, std::cout, std::cerr); }
