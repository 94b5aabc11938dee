#include <iostream>
#include <string>
#include <vector>

#include "kuramem/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kuramem::run_cli(args, std::cout, std::cerr);
}
