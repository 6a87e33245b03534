#include <iostream>

#include "cli/commands.h"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return mld::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
