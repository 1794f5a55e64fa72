#include <iostream>
#include <string>
#include <vector>

#include <hexforce/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hexforce::cli::run(args, std::cout, std::cerr);
}
