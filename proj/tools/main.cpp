#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return wreath_id::cli::run(argc, argv, std::cout, std::cerr);
}
