#include <iostream>

#include "lwbp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lwbp::run(args, std::cout, std::cerr);
}
