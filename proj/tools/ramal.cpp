#include <iostream>
#include <string>
#include <vector>

#include "ramal/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ramal::run_cli(args, std::cout, std::cerr);
}
