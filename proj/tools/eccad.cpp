#include <iostream>

#include "eccad/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eccad::run_cli(args, std::cout, std::cerr);
}
