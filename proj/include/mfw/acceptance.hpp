#pragma once

#include <string>
#include <vector>

namespace mfw {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

constexpr unsigned kDefaultSeed = 20240611;

// Runs all eleven acceptance criteria. Randomised parts draw from seed.
std::vector<CriterionResult> run_acceptance(unsigned seed = kDefaultSeed);
std::string format_result(const CriterionResult& r);

}  // namespace mfw
