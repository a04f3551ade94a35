#include <iostream>

#include "longwave/cli.hpp"

int main(int argc, char** argv) {
  return longwave::cli::parse_and_dispatch(argc, argv, std::cout, std::cerr);
}
