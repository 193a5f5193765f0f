#include <iostream>

#include "degfusion/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return degfusion::run_cli(args, std::cout, std::cerr);
}
