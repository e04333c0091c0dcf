#include <iostream>
#include <string>
#include <vector>

#include "entropic/cli/run.hpp"

int main(int argc, char** argv) {
  return entropic::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
