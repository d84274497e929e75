#include <iostream>

#include "fig8/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fig8::cli::run(args, std::cout, std::cerr);
}
