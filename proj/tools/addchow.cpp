#include <iostream>

#include "addchow/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return addchow::run_cli(args, std::cout, std::cerr);
}
