#include "moilp/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return moilp::run_command(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
