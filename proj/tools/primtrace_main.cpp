#include <iostream>

#include "primtrace/cli.hpp"

int main(int argc, char** argv) { return primtrace::cli::run(argc, argv, std::cout, std::cerr); }
