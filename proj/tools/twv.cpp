#include <iostream>
#include <string>
#include <vector>

#include "twv/workbench.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return twv::run_command(args, std::cout, std::cerr);
}
