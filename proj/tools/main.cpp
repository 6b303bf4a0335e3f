#include <iostream>

#include "bumpless/cli.hpp"

int main(int argc, char** argv) {
  return bumpless::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
