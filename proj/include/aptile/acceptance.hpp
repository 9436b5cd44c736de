#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace aptile {

// Result of one acceptance criterion run.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // what was checked, or the first failure
  double seconds = 0.0;
};

// Runs the ten acceptance criteria with a deterministic seed (randomized
// inputs are drawn from an explicit PRNG so runs are reproducible).  Never
// throws: a criterion that raises records the exception as its failure.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 20260825u);

}  // namespace aptile
