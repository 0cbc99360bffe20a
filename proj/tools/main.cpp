#include <iostream>
#include <string>
#include <vector>

#include "braidtrace/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return braidtrace::run_cli(args, std::cout, std::cerr);
}
