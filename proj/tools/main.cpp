#include <iostream>
#include <string>
#include <vector>

#include "nilhoro/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return nilhoro::cli::run(std::move(args), std::cout, std::cerr);
}
