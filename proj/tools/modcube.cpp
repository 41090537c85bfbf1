#include <iostream>
#include <string>
#include <vector>

#include "modcube/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return modcube::run(args, std::cout, std::cerr);
}
