#include <iostream>

#include "sepclass/cli.hpp"

int main(int argc, char** argv) {
  return sepclass::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
