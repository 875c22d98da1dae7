#include <iostream>
#include <string>
#include <vector>

#include "rosecover/cli.hpp"

int main(int argc, char **argv) {
  return rosecover::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
