#include <iostream>
#include <string>
#include <vector>

#include "hopfelim/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const hopfelim::CommandResult r = hopfelim::run_command(args, std::cin);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit_code;
}
