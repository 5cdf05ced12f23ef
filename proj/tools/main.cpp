#include <iostream>
#include <string>
#include <vector>

#include "spindiscord/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spindiscord::cli::run(args, std::cout, std::cerr);
}
