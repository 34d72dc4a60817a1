#include <iostream>

#include "g4uip/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return g4uip::cli::run(args, std::cout, std::cerr);
}
