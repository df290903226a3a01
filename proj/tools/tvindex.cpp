#include <iostream>
#include <string>
#include <vector>

#include "tvindex/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return tvi::cli::run(args, std::cout, std::cerr);
}
