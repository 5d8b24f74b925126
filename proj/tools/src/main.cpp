#include <iostream>

#include "ginv/cli/commands.hpp"

int main(int argc, char** argv) { return ginv::cli::run(argc, argv, std::cout, std::cerr); }
