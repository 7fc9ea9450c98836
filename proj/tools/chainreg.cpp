#include <iostream>
#include <string>
#include <vector>

#include "chainreg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chainreg::run(args, std::cout, std::cerr);
}
