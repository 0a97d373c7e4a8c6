#include <iostream>

#include "recourse/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return recourse::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cin, std::cout, std::cerr);
}
