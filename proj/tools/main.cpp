#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return fourecc::cli::main_with(argc, argv, std::cin, std::cout, std::cerr);
}
