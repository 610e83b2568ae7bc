#include <iostream>

#include "tvb/cli.hpp"

int main(int argc, char** argv) {
  return tvb::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
