#include <iostream>
#include <string>
#include <vector>

#include "chordweights/cli.hpp"

int main(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chordweights::cli::run(args, std::cin, std::cout, std::cerr);
}
