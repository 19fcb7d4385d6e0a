#include <iostream>

#include "exsym/io/cli.hpp"

int main(int argc, char** argv) {
  return exsym::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
