#include <iostream>

#include "sperner/cli.hpp"

int main(int argc, char** argv) {
  return sperner::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
