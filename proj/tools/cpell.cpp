#include <iostream>

#include "cpell/cli.hpp"

int main(int argc, char **argv) {
  return cpell::cli::run(argc, argv, std::cout, std::cerr);
}
