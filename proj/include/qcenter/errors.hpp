#pragma once

#include <stdexcept>
#include <string>

namespace qcenter {

/// Enumeration budget or orbit guard exceeded. Carries the partial count
/// reached before giving up.
struct BudgetError : std::runtime_error {
    long long partial_count;
    explicit BudgetError(const std::string& what, long long partial = 0)
        : std::runtime_error(what), partial_count(partial) {}
};

} // namespace qcenter
