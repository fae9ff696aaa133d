#include <iostream>
#include <string>
#include <vector>

#include "kcert/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return kcert::cli::run(args, std::cout, std::cerr);
}
