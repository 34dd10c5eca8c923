#include "qsi/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return qsi::run_cli(argc, argv, std::cout, std::cerr);
}
