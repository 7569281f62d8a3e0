#include <iostream>
#include <string>
#include <vector>

#include "plk/cli.hpp"

int main(int argc, char** argv) {
  return plk::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
