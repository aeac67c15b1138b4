#include <iostream>
#include <string>
#include <vector>

#include "zrule/cli.hpp"

int main(int argc, char** argv) {
  return zrule::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
