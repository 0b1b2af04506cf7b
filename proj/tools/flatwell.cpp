#include <iostream>
#include <string>
#include <vector>

#include "flatwell/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return flatwell::cli::run(args, std::cout, std::cerr);
}
