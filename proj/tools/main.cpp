#include <iostream>

#include "svrasym/cli/commands.hpp"

int main(int argc, char** argv) { return svrasym::cli::run(argc, argv, std::cout, std::cerr); }
