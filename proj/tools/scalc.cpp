#include <iostream>

#include "scalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return scalc::run_cli(args, std::cout, std::cerr);
}
