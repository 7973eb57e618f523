#include <iostream>

#include "eisenbox/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return eisenbox::run(args, std::cout, std::cerr);
}
