#pragma once

#include <string>
#include <vector>

#include "holotor/numerics.hpp"

namespace holotor {

struct SuiteResult {
    std::string suite;
    int trials = 0;
    bool passed = false;
    double max_residual = 0.0;
    std::string detail;  // one-line failure description, empty on pass
};

// Suites: braid-relations, biquandle-ybe, schur-weyl, clifford,
// braiding-residuals, torsion-theorem.  Throws dim_error on unknown names.
SuiteResult run_suite(const std::string& name, int trials, unsigned long seed);

const std::vector<std::string>& suite_names();

}  // namespace holotor
