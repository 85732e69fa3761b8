#pragma once

#include <stdexcept>
#include <string>

namespace dynsamp {

/// Invalid parameters or configuration. The CLI maps this to exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure: rank deficiency, singularity, non-convergence.
/// The CLI maps this to exit code 3.
struct numerical_error : std::runtime_error {
    explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace dynsamp
