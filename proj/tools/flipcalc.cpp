#include "flipcalc/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <unistd.h>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO) != 0;
  return flipcalc::cli::run_cli(args, std::cout, std::cerr, color);
}
