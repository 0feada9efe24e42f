#include <iostream>
#include <string>
#include <vector>

#include "infomask/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return infomask::RunCli(args, std::cout, std::cerr);
}
