#include <iostream>

#include "gwt/cli.hpp"

int main(int argc, char** argv) {
  return gwt::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
