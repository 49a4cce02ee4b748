#include <iostream>

#include "lemod/cli.hpp"

int main(int argc, char** argv) {
  return lemod::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
