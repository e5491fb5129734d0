#include <iostream>
#include <string>
#include <vector>

#include "rotframe/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return rotframe::cli::run(args, std::cout, std::cerr);
}
