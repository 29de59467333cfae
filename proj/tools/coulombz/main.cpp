#include <iostream>
#include <string>
#include <vector>

#include "coulombz/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return coulombz::cli::run(args, std::cout, std::cerr);
}
