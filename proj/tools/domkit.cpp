#include <iostream>

#include "domkit/cli.hpp"

int main(int argc, char** argv) {
  return domkit::cli::run(argc, argv, std::cout, std::cerr);
}
