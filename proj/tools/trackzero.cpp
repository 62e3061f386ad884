#include "trackzero/cli/command.hpp"

#include <iostream>

int main(int argc, char** argv) { return tz::run_command(argc, argv, std::cout, std::cerr); }
