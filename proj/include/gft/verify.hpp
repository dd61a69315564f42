#pragma once

#include <string>
#include <vector>

#include "gft/specfun.hpp"

namespace gft {

struct CheckResult {
    std::string module;
    std::string name;
    std::string suite;  // "exact" or "numeric"
    bool pass = false;
    std::string detail;
};

// Runs the registered invariant checks; suite is "all", "exact" or "numeric".
std::vector<CheckResult> run_verification(const std::string& suite, const Tolerances& tol);

// The acceptance gate: ten numbered criteria.  criterion in 1..10 runs one,
// 0 runs all; each result carries its criterion index in the name.
std::vector<CheckResult> run_acceptance(int criterion, const Tolerances& tol);

}  // namespace gft
