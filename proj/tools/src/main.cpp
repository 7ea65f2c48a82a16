#include <iostream>

#include "cluster_cli/cli.hpp"

int main(int argc, char** argv) {
  return cluster::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
