#pragma once

#include <stdexcept>

namespace rcc {

// Raised when an exhaustive computation would exceed its configured budget.
// Budgets are counted in units of work (nodes visited, trees produced), not
// wall time, so the refusal point is deterministic.
class budget_exceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace rcc
