#include "fibrefilter/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return fibrefilter::cli::run(argc, argv, std::cout, std::cerr);
}
