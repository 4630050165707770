#pragma once

#include <stdexcept>
#include <string>

namespace evt {

/// Invalid or corrupt input data (bad CSV rows, duplicate dates, degenerate samples).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// An optimization failed to converge within its budget.
struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace evt
