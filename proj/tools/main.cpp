#include "cli_app.hpp"

#include <iostream>

int main(int argc, char** argv) { return hyperext::cli::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
