#pragma once

#include <stdexcept>
#include <string>

namespace tropquot {

// Bad user input: malformed files, indices out of range, points that do not
// belong to the fan. CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// A mathematical check failed (invalid fan, failed verification). CLI maps
// this to exit code 1 when it is the result of the requested computation.
struct math_error : std::runtime_error {
    explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tropquot
