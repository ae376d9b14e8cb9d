#pragma once

#include <string>
#include <vector>

#include "qcenter/root_system.hpp"

namespace qcenter {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail; // short human-readable evidence or failure reason
};

/// Closed-form base-change data used as the oracle for the computed Cartan
/// matrices and fundamental weights.
RatMatrix expected_fundamental_weights_in_roots(LieType t); // column i = lambda_i
IntMatrix expected_simple_roots_in_weights(LieType t);      // row i = alpha_i

/// The full cross-verification suite: one result per criterion. Never
/// throws; failures are reported in the result entries.
std::vector<CheckResult> run_verification_suite();

} // namespace qcenter
