#pragma once

#include <string>

#include "spancat/instances.hpp"

namespace spancat {

/// Runs a named checker suite (axioms | comonads | tabulation |
/// biequivalence | direct-sums | all) over an exhaustive sweep of objects
/// up to `bound` plus the data in the instance. Results come back sorted
/// by subject so reports are byte-reproducible.
SuiteReport run_suite(const std::string& name, const Instance& inst,
                      int bound);

}  // namespace spancat
