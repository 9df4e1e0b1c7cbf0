#include <iostream>

#include "freecert/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return freecert::run_cli(args, std::cout, std::cerr);
}
