#include <iostream>

#include "vortexq/cli.hpp"

int main(int argc, char** argv) {
  return vortexq::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
