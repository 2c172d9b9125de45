#include <iostream>

#include "quiverlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quiverlab::run_cli(args, std::cout, std::cerr);
}
