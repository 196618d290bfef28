#include <iostream>

#include "ppa/cli.hpp"

int main(int argc, char** argv) {
  return ppa::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
