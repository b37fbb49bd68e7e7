#include <iostream>

#include "modinv/cli.hpp"

int main(int argc, char** argv) {
  return modinv::cli_main(argc, argv, std::cout, std::cerr);
}
