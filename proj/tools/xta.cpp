#include <iostream>
#include <string>
#include <vector>

#include "xta/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return xta::cli_main(args, std::cout, std::cerr);
}
