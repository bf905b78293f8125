#include <iostream>

#include "inca/io/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return inca::io::runCli(args, std::cout, std::cerr);
}
