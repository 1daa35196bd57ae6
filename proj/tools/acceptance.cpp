#include "mfw/acceptance.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  unsigned seed = mfw::kDefaultSeed;
  if (argc > 1) seed = static_cast<unsigned>(std::stoul(argv[1]));
  bool all = true;
  for (const auto& r : mfw::run_acceptance(seed)) {
    std::cout << mfw::format_result(r) << std::endl;
    all = all && r.passed;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
