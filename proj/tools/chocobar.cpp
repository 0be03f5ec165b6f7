#include <iostream>
#include <string>
#include <vector>

#include "chocobar_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chocobar::cli::main_with_args(args, std::cin, std::cout, std::cerr);
}
