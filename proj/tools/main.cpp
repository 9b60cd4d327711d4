#include <iostream>

#include "abelian/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return abelian::cli::run(args, std::cin, std::cout, std::cerr);
}
