#pragma once

#include <stdexcept>
#include <string>

namespace cse {

/// Thrown when an operation exceeds a configured resource cap
/// (tuple enumeration limit, variable-count limit, ground-base size).
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace cse
