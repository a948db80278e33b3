// Entry point for the nelab command-line tool.
#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nelab::cli::run(args, std::cout, std::cerr);
}
