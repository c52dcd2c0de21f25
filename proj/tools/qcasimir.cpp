#include <iostream>

#include "qcasimir/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qcasimir::cli::run(args, std::cout, std::cerr);
}
