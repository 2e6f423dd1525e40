#include <iostream>
#include <string>
#include <vector>

#include "burneq/cli.hpp"

int main(int argc, char **argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return burneq::cli::run(std::move(args), std::cout, std::cerr);
}
