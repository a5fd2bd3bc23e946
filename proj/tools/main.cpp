#include <iostream>
#include <string>
#include <vector>

#include "cyclattice/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cyc::cli::runCommand(args, std::cout, std::cerr);
}
