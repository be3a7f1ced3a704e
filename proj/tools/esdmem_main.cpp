#include <iostream>
#include <string>
#include <vector>

#include "esdmem/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return esdmem::cli::run(args, std::cout, std::cerr);
}
