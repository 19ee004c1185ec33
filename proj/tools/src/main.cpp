#include <iostream>

#include "anchorrec_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return anchorrec::cli::cli_main(args, std::cout, std::cerr);
}
