#include <iostream>

#include "mincomb/cli.hpp"

int main(int argc, char** argv) {
  return mincomb::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
