#include <iostream>

#include "togglekit/cli.hpp"

int main(int argc, char** argv) {
  return togglekit::run_cli(argc, argv, std::cout, std::cerr);
}
