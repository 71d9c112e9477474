#include <iostream>
#include <string>
#include <vector>

#include "pellredei/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pellredei::cli::run(args, std::cout, std::cerr);
}
