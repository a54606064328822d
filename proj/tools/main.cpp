#include <iostream>

#include "uhsl2/cli.hpp"

int main(int argc, char** argv) {
  return uhsl2::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
