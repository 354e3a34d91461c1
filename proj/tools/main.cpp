#include <iostream>
#include <string>
#include <vector>

#include "frobmf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return frobmf::run_cli(args, std::cout, std::cerr);
}
