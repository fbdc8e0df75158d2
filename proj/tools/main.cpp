#include <iostream>
#include <string>
#include <vector>

#include "tset/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return tset::cli::run(args, std::cout, std::cerr);
}
