#include <iostream>

#include "qhz_cli/app.hpp"

int main(int argc, char** argv) {
  return qhz::cli::run_cli(argc, argv, std::cout, std::cerr);
}
