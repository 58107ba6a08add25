#include <iostream>
#include <string>
#include <vector>

#include "setalg/cli.hpp"

int main(int argc, char** argv) {
  return setalg::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
