#include <superdom/suites.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 20240601;
  return superdom::run_criteria(std::cout, seed) ? EXIT_SUCCESS : EXIT_FAILURE;
}
