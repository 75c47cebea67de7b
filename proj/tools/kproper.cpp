#include <iostream>
#include <string>
#include <vector>

#include "kproper/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kproper::cli::run(args, std::cout, std::cerr);
}
