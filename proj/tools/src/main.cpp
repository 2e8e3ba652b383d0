#include <iostream>
#include <string>
#include <vector>

#include "a1weyl_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return a1weyl::cli::run(args, std::cout, std::cerr);
}
