#pragma once

#include <stdexcept>
#include <string>

namespace kcenter {

// Input failed validation: bad lengths, duplicate edges, malformed files,
// or a structural precondition (e.g. an invalid shortest path cover).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A configured capacity was exceeded (cover-table universe, exact-solver size).
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

// The instance admits no feasible solution for the given budget.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The search exceeded the configured enumeration budget at every scale that
// could have produced a solution.
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace kcenter
