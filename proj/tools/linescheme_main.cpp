#include <vector>

#include "lsc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lsc::run_cli(args);
}
